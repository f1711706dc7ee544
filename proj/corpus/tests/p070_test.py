from p070 import f070_0


def test_f070_0_0():
    assert f070_0([19, 19], 4) == 529


def test_f070_0_1():
    assert f070_0([-2, -3, -1, 19, 18, 16, 2], 9) == 1339


def test_f070_0_2():
    assert f070_0([-1, 0, 13, -4, 18, 20], 1) == 408
