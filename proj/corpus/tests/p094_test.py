from p094 import f094_0


def test_f094_0_0():
    assert f094_0([6, 10, -2, 3, -5], 8) == 498


def test_f094_0_1():
    assert f094_0([4, 4], 3) == 173


def test_f094_0_2():
    assert f094_0([3, 18, -4, 10, 11, 17], 7) == 437
