from p096 import f096_0


def test_f096_0_0():
    assert f096_0([9, 4], 7) == 385


def test_f096_0_1():
    assert f096_0([5], 9) == 458


def test_f096_0_2():
    assert f096_0([16, 16], 9) == 643
