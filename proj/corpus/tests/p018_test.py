from p018 import f018_0


def test_f018_0_0():
    assert f018_0([16], 8) == 16


def test_f018_0_1():
    assert f018_0([2, 0], 8) == 2


def test_f018_0_2():
    assert f018_0([2, 13, 6, 15, 14, 1], 6) == 15
