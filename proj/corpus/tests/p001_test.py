from p001 import f001


def test_f001_0():
    assert f001() == 84


def test_f001_1():
    assert f001() == 84


def test_f001_2():
    assert f001() == 84
