from p108 import f108_0, f108_1, f108_2


def test_f108_0_0():
    assert f108_0([-2, 1, -2, 20, -5], 6) == 301


def test_f108_0_1():
    assert f108_0([4], 5) == 243


def test_f108_0_2():
    assert f108_0([15, -1], 9) == 538


def test_f108_1_0():
    assert f108_1([2, -2, 11, 5, 17], 2) == 205


def test_f108_1_1():
    assert f108_1([9, 19, 5], 4) == 262


def test_f108_1_2():
    assert f108_1([-1, 8], 5) == 199


def test_f108_2_0():
    assert f108_2([-4, 0], 0) == 8


def test_f108_2_1():
    assert f108_2([2, 0], 6) == 160


def test_f108_2_2():
    assert f108_2([17, 11, -5], 3) == 52
