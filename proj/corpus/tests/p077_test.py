from p077 import f077_0, f077_1


def test_f077_0_0():
    assert f077_0([3], 6) == 187


def test_f077_0_1():
    assert f077_0([6, 4, -5, -2, 12, 12], 0) == 98


def test_f077_0_2():
    assert f077_0([12, 7, 17, 9, 12, 6], 1) == 214


def test_f077_1_0():
    assert f077_1([15, 4, 3, 8, 0, 4], 3) == 27


def test_f077_1_1():
    assert f077_1([20, -4, -1, 10, 10, 19, 8], 3) == 26


def test_f077_1_2():
    assert f077_1([18, 3, 17, 13, -5, 8, 7], 9) == 256
