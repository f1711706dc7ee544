from p103 import f103_0, f103_1, f103_2


def test_f103_0_0():
    assert f103_0([1, 6, -2], 6) == 7


def test_f103_0_1():
    assert f103_0([17, 5, 15, 5, 2, -5], 4) == 10


def test_f103_0_2():
    assert f103_0([9, -3], 8) == 8


def test_f103_1_0():
    assert f103_1([13], 9) == 60


def test_f103_1_1():
    assert f103_1([-2, 13, 20], 8) == 123


def test_f103_1_2():
    assert f103_1([17, 8, 12, -1], 0) == 139


def test_f103_2_0():
    assert f103_2([2, -5, 19, -5, 3, 18], 6) == 105


def test_f103_2_1():
    assert f103_2([2, -3, 19, 1, -5, -2], 7) == 63


def test_f103_2_2():
    assert f103_2([7, 16, 12], 4) == 94
