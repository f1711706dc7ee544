from p017 import f017_0


def test_f017_0_0():
    assert f017_0([6, 6, -5, -2], 0) == 0


def test_f017_0_1():
    assert f017_0([20, 1, 5, 4, 2, -5], 7) == 1


def test_f017_0_2():
    assert f017_0([13, 14, 8], 8) == 2
