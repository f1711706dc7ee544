from p110 import f110_0, f110_1, f110_2


def test_f110_0_0():
    assert f110_0([12, 1, -3, 20, -2], 2) == 220


def test_f110_0_1():
    assert f110_0([5, 3], 2) == 112


def test_f110_0_2():
    assert f110_0([15, 9, 20, 15, 7, 20, 6], 4) == 538


def test_f110_1_0():
    assert f110_1([-3, 15, 9, -5], 1) == 208


def test_f110_1_1():
    assert f110_1([12, -3, 7], 6) == 312


def test_f110_1_2():
    assert f110_1([2, 14, -2, 11, -3, 4, -4], 5) == 381


def test_f110_2_0():
    assert f110_2([12], 1) == 9


def test_f110_2_1():
    assert f110_2([13, 8], 6) == 143


def test_f110_2_2():
    assert f110_2([5, -5, 8], 4) == 62
