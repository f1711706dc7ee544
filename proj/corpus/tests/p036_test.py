from p036 import f036_0


def test_f036_0_0():
    assert f036_0([16, 16, 11, 11, -3, 20, 16], 1) == 28


def test_f036_0_1():
    assert f036_0([5, 2, 16, 20], 7) == 20


def test_f036_0_2():
    assert f036_0([13, 17, -2, 8, 4, 18], 7) == 21
