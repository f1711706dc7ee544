from p033 import f033_0


def test_f033_0_0():
    assert f033_0([20, 10, 18, 12], 2) == 600


def test_f033_0_1():
    assert f033_0([5, 18, 17], 1) == 423


def test_f033_0_2():
    assert f033_0([13, 17, 8, 17, 13], 9) == 714
