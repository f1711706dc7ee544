from p076 import f076_0, f076_1, f076_2


def test_f076_0_0():
    assert f076_0([18, -2, 19, 15, 20, 16], 2) == 553


def test_f076_0_1():
    assert f076_0([-1, 18, 18, 0], 8) == 282


def test_f076_0_2():
    assert f076_0([1, 7, 1], 8) == 79


def test_f076_1_0():
    assert f076_1([-3, 13, 9, 10, 10], 6) == 47


def test_f076_1_1():
    assert f076_1([14, -3, 9, 17], 5) == 43


def test_f076_1_2():
    assert f076_1([1, 20, 20, 16, 19, 10, 14], 3) == 29


def test_f076_2_0():
    assert f076_2([-3, 12, -5], 6) == 6


def test_f076_2_1():
    assert f076_2([3, 19, 2, -5], 4) == 2


def test_f076_2_2():
    assert f076_2([15], 0) == 6
