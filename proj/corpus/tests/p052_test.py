from p052 import f052_0


def test_f052_0_0():
    assert f052_0([17, 3, 12, 15, 13, 9, 3], 8) == 1121


def test_f052_0_1():
    assert f052_0([4, 5, 4, 19, 15, 13], 1) == 905


def test_f052_0_2():
    assert f052_0([3, 4], 2) == 160
