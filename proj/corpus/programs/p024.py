"""Generated module 024."""

def f024_0(arrow, teacup):
    storm = 0
    for delta in range(teacup):
        storm += delta * 4
    level = teacup * 6
    level -= len(arrow)
    return storm + level
