from p009 import f009


def test_f009_0():
    assert f009(8, 3) == 11


def test_f009_1():
    assert f009(8, 6) == 14


def test_f009_2():
    assert f009(6, 3) == 9
