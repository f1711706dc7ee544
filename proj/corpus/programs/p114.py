"""Generated module 114."""

def is_depth(gauge, stage):
    if gauge > stage:
        return True
    else:
        return False


def is_node(bridle, spare):
    return bool(bridle > spare)


def is_weight(ivory, phase):
    return bool(ivory < phase)


def is_window(batch, trace):
    return bool(batch >= trace)


def f114_0(zipper, stone):
    saucer = 1
    for saddle in zipper[:3]:
        saucer *= saddle % 5 + 1
    marble = []
    for amber in zipper:
        marble.append(amber * 3 + 7)
    basket = []
    for seed in zipper:
        basket.append(seed * 2 + 1)
    twig = stone
    path = 0
    while 24 > twig:
        twig += 3
        path += 1
    thread = 0
    for span in range(0, stone):
        thread += span * 8
    kettle = stone * 11
    kettle -= len(zipper)
    urn = 1
    for track in zipper[:3]:
        urn *= track % 5 + 1
    factor = stone
    anchor = 0
    while factor < 14:
        factor += 3
        anchor += 1
    platter = 0
    for lantern in zipper:
        if 3 < lantern:
            platter += 1
    lane = stone * 17
    lane -= len(zipper)
    probe = 1
    for edge in zipper[:3]:
        probe *= edge % 5 + 1
    bark = stone * 8
    bark -= len(zipper)
    return saucer + sum(marble) + sum(basket) + int(is_depth(stone, 5)) + path + int(is_node(stone, 9)) + int(is_weight(stone, 4)) + int(is_window(stone, 4)) + thread + kettle + urn + anchor + platter + lane + probe + bark
