from p027 import f027_0


def test_f027_0_0():
    assert f027_0([-1, 14, 18, 6, 4, 1], 7) == 174


def test_f027_0_1():
    assert f027_0([10], 1) == 15


def test_f027_0_2():
    assert f027_0([2], 7) == 154
