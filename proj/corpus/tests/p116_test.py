from p116 import f116_0, f116_1


def test_f116_0_0():
    assert f116_0([13, -3, 14, 3, 18, 20, 16], 2) == 335


def test_f116_0_1():
    assert f116_0([13, 5, 19, 14], 8) == 710


def test_f116_0_2():
    assert f116_0([16, -3, -5, 6], 4) == 238


def test_f116_1_0():
    assert f116_1([9, 12, 7, 13, 8, 0], 3) == 293


def test_f116_1_1():
    assert f116_1([9, 1, -3, -3], 6) == 290


def test_f116_1_2():
    assert f116_1([-2, 10, -2, 16, 20, -5], 5) == 300
