"""Generated module 050."""

def is_collar(platter, meter):
    if platter >= meter:
        return True
    else:
        return False


def f050_0(spoon, margin):
    storm = 0
    for button in range(0, len(spoon)):
        if storm < spoon[button]:
            storm = spoon[button]
    urn = [wagon * 5 + 2 for wagon in spoon]
    jug = margin * 16
    jug -= len(spoon)
    needle = margin
    badge = 0
    while needle < 24:
        needle += 2
        badge += 1
    stove = 0
    for ivory in range(0, margin):
        stove = stove + ivory * 7
    return storm + sum(urn) + jug + int(is_collar(margin, 5)) + badge + stove


def is_twig(bark, candle):
    if bark >= candle:
        return True
    else:
        return False


def is_corner(depth, petal):
    return bool(depth < petal)


def f050_1(metric, spare):
    skillet = spare * 8
    skillet -= len(metric)
    harness = 0
    if not spare == 6:
        harness = 7
    coral = 0
    for breeze in range(0, spare):
        coral = coral + breeze * 3
    leaf = 1
    for pitcher in metric[:3]:
        leaf *= pitcher % 5 + 1
    wall = 0
    for lantern in range(len(metric)):
        if metric[lantern] > wall:
            wall = metric[lantern]
    return int(is_twig(spare, 4)) + skillet + harness + coral + leaf + int(is_corner(spare, 9)) + wall
