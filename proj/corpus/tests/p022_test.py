from p022 import f022_0


def test_f022_0_0():
    assert f022_0([-2, 17, 10, 15], 7) == 273


def test_f022_0_1():
    assert f022_0([19, 19, 12], 7) == 311


def test_f022_0_2():
    assert f022_0([11], 1) == 46
