from p063 import f063_0


def test_f063_0_0():
    assert f063_0([19, 3, 18, 0, 14], 8) == 1012


def test_f063_0_1():
    assert f063_0([18, 15, 17, 10, 0, -4, -1], 3) == 763


def test_f063_0_2():
    assert f063_0([4, 16], 9) == 594
