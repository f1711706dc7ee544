from p006 import f006


def test_f006_0():
    assert f006(3) == 3


def test_f006_1():
    assert f006(6) == 6


def test_f006_2():
    assert f006(3) == 3
