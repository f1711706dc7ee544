from p026 import f026_0


def test_f026_0_0():
    assert f026_0([1, -4, -2], 5) == 31


def test_f026_0_1():
    assert f026_0([9, 11, 1, -4, 11, 15], 2) == 39


def test_f026_0_2():
    assert f026_0([18], 4) == 21
