from p028 import f028_0


def test_f028_0_0():
    assert f028_0([15, 17, 17, -2], 2) == 40


def test_f028_0_1():
    assert f028_0([-3, 9], 0) == 49


def test_f028_0_2():
    assert f028_0([20], 8) == 23
