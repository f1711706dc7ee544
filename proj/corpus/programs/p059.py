"""Generated module 059."""

def f059_0(speed, cursor):
    fabric = [flask * 3 + 4 for flask in speed]
    offset = cursor
    scale = 0
    while offset < 33:
        offset += 1
        scale += 1
    forest = []
    for score in speed:
        forest.append(score * 4 + 7)
    keg = 0
    if cursor != 2:
        keg = 6
    depth = 1
    for linen in speed[:3]:
        depth *= linen % 5 + 1
    signal = [pointer * 2 + 6 for pointer in speed]
    copper = 0
    for harvest in range(0, cursor):
        copper = copper + harvest * 4
    return sum(fabric) + scale + sum(forest) + keg + depth + sum(signal) + copper


def is_button(marker, helmet):
    return bool(marker > helmet)


def f059_1(storm, marble):
    platter = 0
    for link in range(marble):
        platter = platter + link * 9
    jacket = marble * 10
    jacket -= len(storm)
    reward = 0
    for root in range(marble):
        reward = reward + root * 7
    stone = 0
    for saddle in storm:
        if 2 < saddle:
            stone += 1
    meadow = marble * 20
    meadow -= len(storm)
    return platter + jacket + reward + int(is_button(marble, 11)) + stone + meadow
