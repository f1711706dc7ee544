"""Generated module 013."""

def is_blossom(gap, trunk):
    if gap < trunk:
        return True
    else:
        return False


def f013_0(sand, pace):
    path = 0
    if pace != 3:
        path = 1
    goblet = pace * 11
    goblet -= len(sand)
    stove = pace
    oven = 0
    while 23 > stove:
        stove += 2
        oven += 1
    return path + int(is_blossom(pace, 6)) + goblet + oven
