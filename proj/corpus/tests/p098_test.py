from p098 import f098_0


def test_f098_0_0():
    assert f098_0([-2], 9) == 448


def test_f098_0_1():
    assert f098_0([13, 0, 8, 10, 7, 1], 3) == 505


def test_f098_0_2():
    assert f098_0([10, 9, 18, -1, 3], 3) == 500
