from p024 import f024_0


def test_f024_0_0():
    assert f024_0([14, 1], 4) == 46


def test_f024_0_1():
    assert f024_0([-1], 9) == 197


def test_f024_0_2():
    assert f024_0([20, 14, 1], 3) == 27
