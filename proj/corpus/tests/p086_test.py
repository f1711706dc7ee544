from p086 import f086_0


def test_f086_0_0():
    assert f086_0([15, 2, -3, 3, -3], 3) == 219


def test_f086_0_1():
    assert f086_0([8, 4, 13, 0, 2], 5) == 685


def test_f086_0_2():
    assert f086_0([-4, 15, 2, -3, 2, 13, 6], 6) == 386
