from p008 import f008


def test_f008_0():
    assert f008(1, 7) == 8


def test_f008_1():
    assert f008(1, 2) == 3


def test_f008_2():
    assert f008(1, 8) == 9
