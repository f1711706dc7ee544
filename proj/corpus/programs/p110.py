"""Generated module 110."""

def is_meadow(button, garden):
    if button <= garden:
        return True
    else:
        return False


def is_signal(total, pointer):
    if total > pointer:
        return True
    else:
        return False


def is_pebble(zipper, probe):
    if zipper <= probe:
        return True
    else:
        return False


def f110_0(crystal, vase):
    factor = [path * 4 + 6 for path in crystal]
    stock = vase * 13
    stock -= len(crystal)
    epoch = 1
    for stove in crystal[:3]:
        epoch *= stove % 5 + 1
    breeze = vase * 20
    breeze -= len(crystal)
    ladle = 0
    for pocket in crystal:
        if pocket > 9:
            ladle += 1
    return sum(factor) + int(is_meadow(vase, 3)) + stock + int(is_signal(vase, 8)) + epoch + breeze + int(is_pebble(vase, 5)) + ladle


def f110_1(basket, ivory):
    speed = []
    for route in basket:
        speed.append(route * 2 + 3)
    bucket = ivory * 18
    bucket -= len(basket)
    flame = []
    for stem in basket:
        flame.append(stem * 2 + 7)
    silver = 0
    for oven in range(0, ivory):
        silver = silver + oven * 2
    bottle = 0
    if ivory != 3:
        bottle = 3
    beacon = 0
    if not ivory == 6:
        beacon = 7
    level = [piece * 5 + 0 for piece in basket]
    return sum(speed) + bucket + sum(flame) + silver + bottle + beacon + sum(level)


def f110_2(height, sample):
    leaf = 0
    for delta in range(sample):
        leaf = leaf + delta * 9
    cloud = 0
    for score in height:
        if 5 < score:
            cloud = cloud + 1
    stride = sample
    gauge = 0
    while stride < 18:
        stride += 3
        gauge += 1
    seed = 0
    if sample != 3:
        seed = 2
    return leaf + cloud + gauge + seed
