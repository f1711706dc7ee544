from p005 import f005


def test_f005_0():
    assert f005(2) == 0


def test_f005_1():
    assert f005(3) == 3


def test_f005_2():
    assert f005(6) == 6
