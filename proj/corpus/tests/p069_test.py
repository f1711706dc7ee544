from p069 import f069_0, f069_1


def test_f069_0_0():
    assert f069_0([20, 13, 18], 6) == 138


def test_f069_0_1():
    assert f069_0([6, -5], 8) == 252


def test_f069_0_2():
    assert f069_0([17, -1, 12, 9, 3], 4) == 57


def test_f069_1_0():
    assert f069_1([-2], 1) == 41


def test_f069_1_1():
    assert f069_1([19, 18, -1, 0, 18, 8], 8) == 282


def test_f069_1_2():
    assert f069_1([20, -3], 9) == 321
