"""Generated module 078."""

def is_delta(bound, stove):
    return bool(bound >= stove)


def is_label(quiver, lead):
    return bool(quiver >= lead)


def f078_0(gap, queue):
    mirror = queue
    cobalt = 0
    while 23 > mirror:
        mirror += 2
        cobalt += 1
    cloud = 1
    for ocean in gap[:3]:
        cloud *= ocean % 5 + 1
    jacket = queue
    piece = 0
    while 38 > jacket:
        jacket += 2
        piece += 1
    silver = 0
    if queue != 6:
        silver = 1
    reading = 0
    for height in gap:
        if 7 < height:
            reading += 1
    thread = 0
    for crate in gap:
        if 2 < crate:
            thread += 1
    cart = 0
    for route in gap:
        if route > 4:
            cart += 1
    return cobalt + cloud + int(is_delta(queue, 3)) + piece + silver + reading + int(is_label(queue, 5)) + thread + cart
