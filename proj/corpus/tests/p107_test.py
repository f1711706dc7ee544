from p107 import f107_0, f107_1


def test_f107_0_0():
    assert f107_0([0, 8], 0) == 145


def test_f107_0_1():
    assert f107_0([16, 3, 6, 3, 15, 16], 4) == 611


def test_f107_0_2():
    assert f107_0([14, 0, 5, 4, 6, 13, 19], 0) == 622


def test_f107_1_0():
    assert f107_1([7, 19, 1, -5, 8], 0) == 286


def test_f107_1_1():
    assert f107_1([-4, 6, -2], 3) == 118


def test_f107_1_2():
    assert f107_1([1, 1, 16, -4, 2, 9], 7) == 459
