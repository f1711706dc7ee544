from p035 import f035_0


def test_f035_0_0():
    assert f035_0([2, 18, 14], 6) == 301


def test_f035_0_1():
    assert f035_0([1, 5], 8) == 267


def test_f035_0_2():
    assert f035_0([7, -1, -1, 6, -5], 8) == 273
