from p038 import f038_0


def test_f038_0_0():
    assert f038_0([-1, 11, 20, 3, 20, 10], 5) == 50


def test_f038_0_1():
    assert f038_0([2, 5, 0, -2, 3, 13], 1) == 42


def test_f038_0_2():
    assert f038_0([-1], 0) == 36
