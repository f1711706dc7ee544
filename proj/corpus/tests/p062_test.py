from p062 import f062_0, f062_1, f062_2


def test_f062_0_0():
    assert f062_0([20, 15, 16, -2, -2, 18], 7) == 72


def test_f062_0_1():
    assert f062_0([13, 3, 14, -2, 0, 17, 17], 6) == 56


def test_f062_0_2():
    assert f062_0([6, 14, 15], 9) == 89


def test_f062_1_0():
    assert f062_1([2, 15, 6, -4], 7) == 229


def test_f062_1_1():
    assert f062_1([2, 0], 3) == 42


def test_f062_1_2():
    assert f062_1([0, 16, 18, 2], 6) == 181


def test_f062_2_0():
    assert f062_2([6, 14, -3, -1, 2], 5) == 150


def test_f062_2_1():
    assert f062_2([13, 12, 9, 4], 8) == 277


def test_f062_2_2():
    assert f062_2([4, -1], 3) == 50
