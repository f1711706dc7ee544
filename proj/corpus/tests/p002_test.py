from p002 import f002


def test_f002_0():
    assert f002() == 32


def test_f002_1():
    assert f002() == 32


def test_f002_2():
    assert f002() == 32
