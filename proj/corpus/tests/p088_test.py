from p088 import f088_0, f088_1


def test_f088_0_0():
    assert f088_0([6, 15, 12, 11, 8], 5) == 482


def test_f088_0_1():
    assert f088_0([18, 19, 14, -2, 19, 3], 1) == 627


def test_f088_0_2():
    assert f088_0([-5, 19], 1) == 136


def test_f088_1_0():
    assert f088_1([-2], 0) == 18


def test_f088_1_1():
    assert f088_1([3], 7) == 207


def test_f088_1_2():
    assert f088_1([-3, 0, 12, 13], 0) == 162
