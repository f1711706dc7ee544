from p000 import f000


def test_f000_0():
    assert f000() == 33


def test_f000_1():
    assert f000() == 33


def test_f000_2():
    assert f000() == 33
