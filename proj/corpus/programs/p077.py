"""Generated module 077."""

def is_frame(ceiling, linen):
    return bool(ceiling < linen)


def f077_0(token, total):
    route = total
    orchard = 0
    while 10 > route:
        route += 3
        orchard += 1
    piece = total * 9
    piece -= len(token)
    platter = []
    for coral in token:
        platter.append(coral * 3 + 3)
    limit = 0
    for stem in range(0, total):
        limit += stem * 8
    return orchard + piece + int(is_frame(total, 6)) + sum(platter) + limit


def is_corner(ember, mirror):
    return bool(ember <= mirror)


def is_twig(gauge, tail):
    if gauge >= tail:
        return True
    else:
        return False


def f077_1(urn, dust):
    fence = 0
    if dust != 3:
        fence = 2
    stock = dust * 5
    stock -= len(urn)
    ratio = 0
    for reading in range(0, dust):
        ratio = ratio + reading * 6
    return fence + int(is_corner(dust, 2)) + stock + int(is_twig(dust, 12)) + ratio
