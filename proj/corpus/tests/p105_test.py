from p105 import f105_0


def test_f105_0_0():
    assert f105_0([20, 7], 7) == 669


def test_f105_0_1():
    assert f105_0([17, 12], 5) == 478


def test_f105_0_2():
    assert f105_0([20], 5) == 414
