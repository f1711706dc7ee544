"""Generated module 068."""

def is_bonus(amount, crystal):
    if amount > crystal:
        return True
    else:
        return False


def f068_0(scarf, margin):
    weight = []
    for platter in scarf:
        weight.append(platter * 2 + 4)
    goblet = 1
    for harness in scarf[:3]:
        goblet *= harness % 5 + 1
    edge = margin * 19
    edge -= len(scarf)
    scale = margin * 9
    scale -= len(scarf)
    queue = margin
    linen = 0
    while queue < 13:
        queue += 2
        linen += 1
    return int(is_bonus(margin, 2)) + sum(weight) + goblet + edge + scale + linen


def f068_1(cloud, stock):
    mitten = 0
    for cart in range(0, len(cloud)):
        if cloud[cart] > mitten:
            mitten = cloud[cart]
    pace = 1
    for score in cloud[:3]:
        pace *= score % 5 + 1
    keg = 1
    for leaf in cloud[:3]:
        keg *= leaf % 5 + 1
    offset = 0
    for button in range(0, stock):
        offset += button * 2
    factor = [sleeve * 4 + 7 for sleeve in cloud]
    return mitten + pace + keg + offset + sum(factor)


def f068_2(trace, probe):
    corner = 0
    for ocean in trace:
        if ocean > 7:
            corner += 1
    stem = 0
    for center in range(len(trace)):
        if stem < trace[center]:
            stem = trace[center]
    bound = 0
    for meadow in trace:
        if 7 < meadow:
            bound = bound + 1
    token = probe
    flame = 0
    while token < 13:
        token += 1
        flame += 1
    return corner + stem + bound + flame
