from p034 import f034_0


def test_f034_0_0():
    assert f034_0([19, 11, -5, -3], 2) == 143


def test_f034_0_1():
    assert f034_0([7, 20, 18, 15, 17, 7, 1], 6) == 447


def test_f034_0_2():
    assert f034_0([9, -1], 8) == 144
