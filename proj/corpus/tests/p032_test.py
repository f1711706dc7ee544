from p032 import f032_0


def test_f032_0_0():
    assert f032_0([17, 5, 8, 4, 19, -4, 20], 1) == 41


def test_f032_0_1():
    assert f032_0([0, 6, 0], 3) == 46


def test_f032_0_2():
    assert f032_0([7, 1, 15, 10, 1, 18, 7], 9) == 155
