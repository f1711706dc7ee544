"""Generated module 099."""

def is_grill(gust, sample):
    return bool(gust < sample)


def f099_0(height, probe):
    chain = probe * 11
    chain -= len(height)
    width = 1
    for amber in height[:3]:
        width *= amber % 5 + 1
    fabric = probe
    button = 0
    while 27 > fabric:
        fabric += 2
        button += 1
    return chain + width + int(is_grill(probe, 9)) + button


def f099_1(window, bonus):
    harvest = []
    for garden in window:
        harvest.append(garden * 3 + 7)
    pace = 0
    for meadow in range(0, len(window)):
        if window[meadow] > pace:
            pace = window[meadow]
    scale = 0
    for fence in window:
        if 3 < fence:
            scale += 1
    signal = bonus
    ember = 0
    while 39 > signal:
        signal += 2
        ember += 1
    return sum(harvest) + pace + scale + ember


def is_harness(breeze, link):
    return bool(breeze >= link)


def is_copper(velvet, bound):
    if velvet < bound:
        return True
    else:
        return False


def f099_2(route, extra):
    node = 0
    for total in route:
        if total > 2:
            node = node + 1
    center = 0
    if not extra == 3:
        center = 7
    return int(is_harness(extra, 10)) + int(is_copper(extra, 2)) + node + center
