from p044 import f044_0, f044_1, f044_2


def test_f044_0_0():
    assert f044_0([18, 3, 18, 18, -3, 16, 11], 0) == 432


def test_f044_0_1():
    assert f044_0([15, 12, 10], 6) == 279


def test_f044_0_2():
    assert f044_0([-5, -5, 3], 7) == 72


def test_f044_1_0():
    assert f044_1([2, 16], 7) == 38


def test_f044_1_1():
    assert f044_1([10], 1) == 35


def test_f044_1_2():
    assert f044_1([4], 6) == 27


def test_f044_2_0():
    assert f044_2([16, 8, 18, 19, -5, 3], 9) == 777


def test_f044_2_1():
    assert f044_2([16, 10, 10, 15], 1) == 250


def test_f044_2_2():
    assert f044_2([16, 8, 13, 9, 18, 1, 20], 5) == 580
