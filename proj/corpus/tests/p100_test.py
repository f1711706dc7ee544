from p100 import f100_0, f100_1, f100_2


def test_f100_0_0():
    assert f100_0([-1, 19, 12, 10, 11, 9, 16], 4) == 168


def test_f100_0_1():
    assert f100_0([1, 10, 3, 11, 19, 8, 20], 3) == 88


def test_f100_0_2():
    assert f100_0([4, -3, 1, 7], 5) == 112


def test_f100_1_0():
    assert f100_1([-5, 0, 19, -5, 2], 2) == 30


def test_f100_1_1():
    assert f100_1([9, 20], 3) == 43


def test_f100_1_2():
    assert f100_1([-4, 0, 5, 13, -1], 0) == 11


def test_f100_2_0():
    assert f100_2([-3, 15, 1, -5, 16, 1, 20], 8) == 14


def test_f100_2_1():
    assert f100_2([13, 18, 18, 0], 3) == 18


def test_f100_2_2():
    assert f100_2([16, 3, 20], 7) == 15
