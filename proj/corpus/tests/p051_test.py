from p051 import f051_0, f051_1


def test_f051_0_0():
    assert f051_0([4, 3, 12, -4], 8) == 147


def test_f051_0_1():
    assert f051_0([11, -4, 12], 9) == 107


def test_f051_0_2():
    assert f051_0([18, -3, -2, 20, 18, 10], 6) == 125


def test_f051_1_0():
    assert f051_1([1, 0], 9) == 12


def test_f051_1_1():
    assert f051_1([-2, 9, 11, 11, 13, 6], 6) == 251


def test_f051_1_2():
    assert f051_1([18, 17, 0, -4, 12], 1) == 232
