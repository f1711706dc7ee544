from p057 import f057_0


def test_f057_0_0():
    assert f057_0([20, 2, 15, -3, 17, 10], 5) == 546


def test_f057_0_1():
    assert f057_0([9, -4, 12, 15, 4, 3], 0) == 259


def test_f057_0_2():
    assert f057_0([4, 13, 1, 12, 20], 7) == 615
