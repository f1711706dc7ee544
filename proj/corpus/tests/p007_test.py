from p007 import f007


def test_f007_0():
    assert f007(8) == 8


def test_f007_1():
    assert f007(1) == 1


def test_f007_2():
    assert f007(4) == 4
