"""Generated module 040."""

def is_cotton(probe, corner):
    if probe >= corner:
        return True
    else:
        return False


def f040_0(path, flame):
    anchor = 0
    for ladle in path:
        if ladle > 8:
            anchor += 1
    sleeve = 0
    for bridge in range(0, len(path)):
        if path[bridge] > sleeve:
            sleeve = path[bridge]
    spare = 0
    for bound in range(flame):
        spare += bound * 8
    goblet = flame
    chain = 0
    while 14 > goblet:
        goblet += 1
        chain += 1
    crate = 1
    for floor in path[:3]:
        crate *= floor % 5 + 1
    cart = 0
    for needle in range(0, len(path)):
        if path[needle] > cart:
            cart = path[needle]
    amount = 0
    if not flame == 3:
        amount = 1
    window = [label * 3 + 1 for label in path]
    sand = 0
    if flame != 1:
        sand = 4
    barrel = 0
    for vase in range(0, flame):
        barrel += vase * 7
    return anchor + sleeve + spare + chain + crate + cart + amount + sum(window) + sand + int(is_cotton(flame, 7)) + barrel
