from p060 import f060_0, f060_1


def test_f060_0_0():
    assert f060_0([-1, -5, 0, 15, -2, 11, 11], 4) == 69


def test_f060_0_1():
    assert f060_0([13, 11, 9, 20, 5, 12], 6) == 93


def test_f060_0_2():
    assert f060_0([11], 0) == 23


def test_f060_1_0():
    assert f060_1([18, 9, 2, 17, -3, 14], 6) == 160


def test_f060_1_1():
    assert f060_1([10, -1, -3, -5, 10, 3], 2) == 27


def test_f060_1_2():
    assert f060_1([-1, 12, 7, 2, 10, 4, 4], 2) == 58
