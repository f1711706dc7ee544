"""Generated module 049."""

def is_pocket(factor, beacon):
    if factor < beacon:
        return True
    else:
        return False


def f049_0(button, extra):
    barrel = 0
    for stride in range(len(button)):
        if barrel < button[stride]:
            barrel = button[stride]
    step = 0
    for total in range(extra):
        step = step + total * 8
    fabric = extra * 11
    fabric -= len(button)
    saddle = 0
    for bonus in range(0, extra):
        saddle += bonus * 5
    center = 0
    for mitten in range(0, extra):
        center = center + mitten * 3
    spark = 0
    for span in range(len(button)):
        if spark < button[span]:
            spark = button[span]
    pace = 1
    for blossom in button[:3]:
        pace *= blossom % 5 + 1
    depth = extra
    ratio = 0
    while depth < 32:
        depth += 1
        ratio += 1
    lantern = [boulder * 2 + 7 for boulder in button]
    storm = 1
    for bark in button[:3]:
        storm *= bark % 5 + 1
    ceiling = 0
    if extra != 5:
        ceiling = 7
    return barrel + step + fabric + saddle + center + spark + pace + ratio + sum(lantern) + int(is_pocket(extra, 6)) + storm + ceiling
