from p074 import f074_0, f074_1, f074_2


def test_f074_0_0():
    assert f074_0([20, -3, 15, -4, 19], 3) == 65


def test_f074_0_1():
    assert f074_0([-3, 5], 7) == 135


def test_f074_0_2():
    assert f074_0([3, 11, 5], 9) == 177


def test_f074_1_0():
    assert f074_1([15, 20, 20], 9) == 454


def test_f074_1_1():
    assert f074_1([5, 3, 6, 11, 1, 9, 6], 5) == 351


def test_f074_1_2():
    assert f074_1([0, -3, 14, 8, 14, 13, 13], 2) == 497


def test_f074_2_0():
    assert f074_2([4, 0, -3], 3) == 16


def test_f074_2_1():
    assert f074_2([-2, -4, 20], 0) == 20


def test_f074_2_2():
    assert f074_2([0, 15, 2, 1, 11], 7) == 17
