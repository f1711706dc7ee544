"""Generated module 102."""

def is_grill(corner, lane):
    return bool(corner >= lane)


def f102_0(fabric, bottle):
    height = 0
    for stock in range(bottle):
        height += stock * 9
    amount = 0
    for chain in range(0, len(fabric)):
        if fabric[chain] > amount:
            amount = fabric[chain]
    wall = 0
    if not bottle == 6:
        wall = 2
    width = 0
    if not bottle == 4:
        width = 8
    return height + amount + wall + int(is_grill(bottle, 5)) + width


def f102_1(depth, pebble):
    cobalt = 1
    for orchard in depth[:3]:
        cobalt *= orchard % 5 + 1
    seed = 0
    for speed in range(0, pebble):
        seed += speed * 9
    middle = []
    for needle in depth:
        middle.append(needle * 5 + 0)
    pivot = [oven * 3 + 7 for oven in depth]
    path = 1
    for leaf in depth[:3]:
        path *= leaf % 5 + 1
    return cobalt + seed + sum(middle) + sum(pivot) + path


def f102_2(tail, meter):
    flame = 0
    for carry in range(meter):
        flame += carry * 7
    step = [harvest * 5 + 7 for harvest in tail]
    metric = 0
    if not meter == 2:
        metric = 4
    window = [collar * 3 + 3 for collar in tail]
    quiver = []
    for pulse in tail:
        quiver.append(pulse * 5 + 3)
    return flame + sum(step) + metric + sum(window) + sum(quiver)
