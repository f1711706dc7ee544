from p119 import f119_0, f119_1, f119_2


def test_f119_0_0():
    assert f119_0([4], 5) == 29


def test_f119_0_1():
    assert f119_0([2], 5) == 25


def test_f119_0_2():
    assert f119_0([17, 9, 13], 7) == 111


def test_f119_1_0():
    assert f119_1([7, 5, 4], 3) == 163


def test_f119_1_1():
    assert f119_1([17], 9) == 235


def test_f119_1_2():
    assert f119_1([-3, 20, 7, 18, 15], 2) == 319


def test_f119_2_0():
    assert f119_2([-3, 4], 1) == 4


def test_f119_2_1():
    assert f119_2([11, -5], 6) == 341


def test_f119_2_2():
    assert f119_2([20, 10, 13, 15, 8, 9], 2) == 42
