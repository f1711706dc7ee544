"""Generated module 071."""

def is_stove(bound, lane):
    if bound > lane:
        return True
    else:
        return False


def f071_0(shield, delta):
    marble = []
    for jacket in shield:
        marble.append(jacket * 5 + 0)
    height = delta
    floor = 0
    while height < 34:
        height += 2
        floor += 1
    orchard = 0
    for marker in shield:
        if 4 < marker:
            orchard += 1
    limit = 0
    for reward in shield:
        if 0 < reward:
            limit += 1
    badge = 0
    for window in shield:
        if window > 2:
            badge += 1
    wall = 0
    for velvet in shield:
        if 3 < velvet:
            wall += 1
    return sum(marble) + floor + orchard + limit + int(is_stove(delta, 2)) + badge + wall
