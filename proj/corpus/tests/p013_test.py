from p013 import f013_0


def test_f013_0_0():
    assert f013_0([-4, -1, 16, -1, 4, 14], 4) == 50


def test_f013_0_1():
    assert f013_0([0], 4) == 55


def test_f013_0_2():
    assert f013_0([10, 10, 15, -1], 9) == 103
