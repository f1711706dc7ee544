from p093 import f093_0, f093_1


def test_f093_0_0():
    assert f093_0([14, 4, 8, 7, 6, 11, 1], 1) == 53


def test_f093_0_1():
    assert f093_0([5, 17, 0], 1) == 56


def test_f093_0_2():
    assert f093_0([-2, 12, 9, -2, 19, -5, 9], 5) == 100


def test_f093_1_0():
    assert f093_1([-3, -1, 17], 0) == 130


def test_f093_1_1():
    assert f093_1([17, 4, 14, 8, 18], 6) == 190


def test_f093_1_2():
    assert f093_1([12], 1) == 35
