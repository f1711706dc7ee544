from p067 import f067_0


def test_f067_0_0():
    assert f067_0([14], 0) == 52


def test_f067_0_1():
    assert f067_0([-3, 20, 11, 1, 10], 1) == 72


def test_f067_0_2():
    assert f067_0([10, -3, 11, 1], 2) == 81
