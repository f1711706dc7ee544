from p101 import f101_0, f101_1, f101_2


def test_f101_0_0():
    assert f101_0([3, 2, 3, 12, 16, 6], 3) == 266


def test_f101_0_1():
    assert f101_0([10], 8) == 182


def test_f101_0_2():
    assert f101_0([-4, 2, -2, 7], 4) == 134


def test_f101_1_0():
    assert f101_1([2, 0, 12, -2], 2) == 175


def test_f101_1_1():
    assert f101_1([-1, 7], 3) == 144


def test_f101_1_2():
    assert f101_1([1, 8, -3], 4) == 192


def test_f101_2_0():
    assert f101_2([12, 4, 12, 0, -2, 13], 4) == 92


def test_f101_2_1():
    assert f101_2([17, 15, 16, 5], 8) == 173


def test_f101_2_2():
    assert f101_2([10, 3, 4], 9) == 186
