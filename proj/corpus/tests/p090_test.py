from p090 import f090_0, f090_1


def test_f090_0_0():
    assert f090_0([8, 15, 4, 2], 6) == 347


def test_f090_0_1():
    assert f090_0([4, 3, 11, 3, 20, 9], 9) == 662


def test_f090_0_2():
    assert f090_0([9, 17, 17, 11, -5, -3, -1], 2) == 394


def test_f090_1_0():
    assert f090_1([17, -5], 2) == 89


def test_f090_1_1():
    assert f090_1([3, 10], 1) == 44


def test_f090_1_2():
    assert f090_1([5, -1, 7], 4) == 209
