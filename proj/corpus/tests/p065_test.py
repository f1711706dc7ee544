from p065 import f065_0, f065_1, f065_2


def test_f065_0_0():
    assert f065_0([13, 19, -4, 6, 10], 2) == 121


def test_f065_0_1():
    assert f065_0([0, 9, -1, 12, 20, 1, 4], 8) == 295


def test_f065_0_2():
    assert f065_0([0, 18], 0) == 48


def test_f065_1_0():
    assert f065_1([20, 20, 8], 2) == 17


def test_f065_1_1():
    assert f065_1([10, 16, 10, 10], 8) == 110


def test_f065_1_2():
    assert f065_1([-4, 1, 10, 1, 8, 0], 1) == 5


def test_f065_2_0():
    assert f065_2([12, 2, -1, 1, 18, 2, 16], 2) == 66


def test_f065_2_1():
    assert f065_2([7, 11, 4, 4, -4], 2) == 45


def test_f065_2_2():
    assert f065_2([5, 19, -2, 16, 4, 17, 1], 2) == 44
