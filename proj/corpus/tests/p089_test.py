from p089 import f089_0


def test_f089_0_0():
    assert f089_0([17, 14, 3, 3], 7) == 814


def test_f089_0_1():
    assert f089_0([8, 17, 7, 13, 7, 0], 6) == 916


def test_f089_0_2():
    assert f089_0([7, -3, 2], 3) == 262
