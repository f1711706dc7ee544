from p041 import f041_0


def test_f041_0_0():
    assert f041_0([-1, 16, 12, 15, 7, 15], 3) == 395


def test_f041_0_1():
    assert f041_0([-4], 2) == 89


def test_f041_0_2():
    assert f041_0([20, 6, 9], 8) == 870
