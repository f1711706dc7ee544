from p055 import f055_0, f055_1


def test_f055_0_0():
    assert f055_0([1, 18, 0, -5, 3], 8) == 160


def test_f055_0_1():
    assert f055_0([5, 17, 6, 13], 3) == 101


def test_f055_0_2():
    assert f055_0([8, 19, 7, 18, 10, 0, 3], 3) == 154


def test_f055_1_0():
    assert f055_1([3, 11, 19, 12], 1) == 32


def test_f055_1_1():
    assert f055_1([4, 5, 18, -1], 7) == 92


def test_f055_1_2():
    assert f055_1([9], 8) == 103
