from p111 import f111_0, f111_1, f111_2


def test_f111_0_0():
    assert f111_0([6, 6], 8) == 650


def test_f111_0_1():
    assert f111_0([4, 0, -3, 13], 8) == 678


def test_f111_0_2():
    assert f111_0([12, 2, 16, 14, 18, 8, 5], 8) == 1068


def test_f111_1_0():
    assert f111_1([13, 18, 14, 9, 4], 5) == 235


def test_f111_1_1():
    assert f111_1([1, -1, 0, 3, 14, 5, 9], 1) == 116


def test_f111_1_2():
    assert f111_1([9, 4, 13, 6], 0) == 115


def test_f111_2_0():
    assert f111_2([-4, 9, 13, 16, 5, 8, 17], 5) == 758


def test_f111_2_1():
    assert f111_2([-1, 11], 8) == 534


def test_f111_2_2():
    assert f111_2([11], 7) == 447
