from p095 import f095_0


def test_f095_0_0():
    assert f095_0([-2, 12], 5) == 524


def test_f095_0_1():
    assert f095_0([11, 18, 10], 8) == 1019


def test_f095_0_2():
    assert f095_0([0, 6, 2, 18], 1) == 146
