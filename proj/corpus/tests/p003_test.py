from p003 import f003


def test_f003_0():
    assert f003() == 52


def test_f003_1():
    assert f003() == 52


def test_f003_2():
    assert f003() == 52
