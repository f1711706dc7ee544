from p047 import f047_0


def test_f047_0_0():
    assert f047_0([15, 6, 8, 17], 4) == 376


def test_f047_0_1():
    assert f047_0([2, 4, 7, 18], 6) == 382


def test_f047_0_2():
    assert f047_0([-3, 3], 0) == 44
