from p023 import f023_0


def test_f023_0_0():
    assert f023_0([0, 7], 0) == 62


def test_f023_0_1():
    assert f023_0([4, 16, 20, 13, 4, 1], 0) == 294


def test_f023_0_2():
    assert f023_0([5, 10, 6, 6, 15, -4], 4) == 210
