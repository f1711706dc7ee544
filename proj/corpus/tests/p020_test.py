from p020 import f020_0


def test_f020_0_0():
    assert f020_0([19, 14, -2, 2], 0) == 16


def test_f020_0_1():
    assert f020_0([9, 15, 20], 1) == 34


def test_f020_0_2():
    assert f020_0([14, 17, 4], 0) == 15
