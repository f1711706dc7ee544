from p102 import f102_0, f102_1, f102_2


def test_f102_0_0():
    assert f102_0([14, 14, 14, 15], 6) == 159


def test_f102_0_1():
    assert f102_0([20, 19, 18, 1, 14, 3], 6) == 164


def test_f102_0_2():
    assert f102_0([19], 6) == 163


def test_f102_1_0():
    assert f102_1([6, 5, 9, -3, -2], 6) == 310


def test_f102_1_1():
    assert f102_1([9], 6) == 224


def test_f102_1_2():
    assert f102_1([-1, 10, 0, 8, -2, 15], 1) == 292


def test_f102_2_0():
    assert f102_2([-5, 16, -5, 11, 17], 2) == 514


def test_f102_2_1():
    assert f102_2([-1, -4], 8) == 161


def test_f102_2_2():
    assert f102_2([19, 11, 7, 20, 19], 6) == 1162
