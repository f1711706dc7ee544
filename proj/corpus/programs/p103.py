"""Generated module 103."""

def is_needle(spoon, velvet):
    return bool(spoon > velvet)


def is_prism(speed, meadow):
    return bool(speed >= meadow)


def f103_0(tally, stove):
    pace = stove
    pebble = 0
    while 20 > pace:
        pace += 2
        pebble += 1
    lead = 0
    for forest in tally:
        if forest > 8:
            lead = lead + 1
    return int(is_needle(stove, 7)) + pebble + int(is_prism(stove, 10)) + lead


def f103_1(linen, label):
    blossom = 0
    for river in range(0, len(linen)):
        if blossom < linen[river]:
            blossom = linen[river]
    phase = 0
    if label != 4:
        phase = 2
    limit = [mitten * 3 + 1 for mitten in linen]
    margin = label
    chunk = 0
    while 23 > margin:
        margin += 3
        chunk += 1
    return blossom + phase + sum(limit) + chunk


def is_piece(candle, scale):
    if candle < scale:
        return True
    else:
        return False


def f103_2(floor, boulder):
    sand = 0
    for ceiling in floor:
        if ceiling > 4:
            sand = sand + 1
    factor = []
    for jacket in floor:
        factor.append(jacket * 2 + 6)
    path = 0
    for copper in floor:
        if copper > 7:
            path = path + 1
    return int(is_piece(boulder, 12)) + sand + sum(factor) + path
