from p049 import f049_0


def test_f049_0_0():
    assert f049_0([2, 9, 10, -2, 19, 0], 4) == 356


def test_f049_0_1():
    assert f049_0([14, 6, 10, 16], 1) == 218


def test_f049_0_2():
    assert f049_0([1, 9, 10], 9) == 803
