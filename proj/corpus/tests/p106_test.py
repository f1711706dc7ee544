from p106 import f106_0, f106_1, f106_2


def test_f106_0_0():
    assert f106_0([-2, 3, 14, -1, 1], 7) == 98


def test_f106_0_1():
    assert f106_0([7, -1, 19, 2, -5, 5, 3], 1) == 166


def test_f106_0_2():
    assert f106_0([-3, 2, 18, 7, 17], 4) == 208


def test_f106_1_0():
    assert f106_1([12, -3, 3, 0, -1, 13], 9) == 332


def test_f106_1_1():
    assert f106_1([-5, 16], 6) == 188


def test_f106_1_2():
    assert f106_1([8, 3, 6, -5, 5, 10, 14], 1) == 46


def test_f106_2_0():
    assert f106_2([0, 1, 4], 5) == 128


def test_f106_2_1():
    assert f106_2([-2, 6, -5, 8, 8], 0) == 156


def test_f106_2_2():
    assert f106_2([18, 9, 10, 15, -5], 1) == 424
