from p061 import f061_0, f061_1


def test_f061_0_0():
    assert f061_0([16, 11, 10], 5) == 20


def test_f061_0_1():
    assert f061_0([12, 18, 0, -5, 0, 18, 9], 5) == 28


def test_f061_0_2():
    assert f061_0([-1, 8, 6, 19, 8, 19], 7) == 54


def test_f061_1_0():
    assert f061_1([-1, 6, -1, 11, 3, -3], 4) == 94


def test_f061_1_1():
    assert f061_1([12, 3, 19, 18, 18], 7) == 273


def test_f061_1_2():
    assert f061_1([18, 18, 1, 15, 13], 4) == 256
