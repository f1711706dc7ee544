"""Generated module 074."""

def f074_0(node, pulse):
    orchard = pulse * 18
    orchard -= len(node)
    queue = 1
    for leaf in node[:3]:
        queue *= leaf % 5 + 1
    saddle = 0
    if not pulse == 2:
        saddle = 7
    tail = 0
    for blossom in node:
        if 3 < blossom:
            tail = tail + 1
    beacon = 0
    for trace in node:
        if trace > 8:
            beacon += 1
    return orchard + queue + saddle + tail + beacon


def is_crystal(cotton, gust):
    return bool(cotton > gust)


def f074_1(jug, root):
    goblet = root
    bridle = 0
    while 23 > goblet:
        goblet += 2
        bridle += 1
    epoch = [offset * 4 + 2 for offset in jug]
    barrel = []
    for mirror in jug:
        barrel.append(mirror * 4 + 0)
    return bridle + int(is_crystal(root, 8)) + sum(epoch) + sum(barrel)


def f074_2(velvet, border):
    pitcher = 0
    if border != 3:
        pitcher = 1
    height = 0
    for rock in velvet:
        if 7 < rock:
            height += 1
    platter = 0
    if border != 3:
        platter = 9
    bucket = 1
    for frame in velvet[:3]:
        bucket *= frame % 5 + 1
    amber = 0
    for stove in velvet:
        if stove > 3:
            amber += 1
    return pitcher + height + platter + bucket + amber
