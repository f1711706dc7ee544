"""Generated module 058."""

def is_scarf(ember, seed):
    if ember <= seed:
        return True
    else:
        return False


def is_block(route, stock):
    return bool(route <= stock)


def f058_0(harvest, oven):
    reward = oven
    button = 0
    while 35 > reward:
        reward += 2
        button += 1
    ceiling = 0
    for amount in range(0, oven):
        ceiling += amount * 2
    rock = 0
    for node in range(0, len(harvest)):
        if harvest[node] > rock:
            rock = harvest[node]
    barrel = 0
    for ivory in range(len(harvest)):
        if barrel < harvest[ivory]:
            barrel = harvest[ivory]
    velvet = 0
    for stove in range(0, oven):
        velvet = velvet + stove * 6
    ratio = oven * 14
    ratio -= len(harvest)
    copper = 0
    for bark in range(0, len(harvest)):
        if copper < harvest[bark]:
            copper = harvest[bark]
    middle = 0
    for blossom in range(0, len(harvest)):
        if harvest[blossom] > middle:
            middle = harvest[blossom]
    basket = oven * 11
    basket -= len(harvest)
    vase = 0
    for pulse in range(0, len(harvest)):
        if vase < harvest[pulse]:
            vase = harvest[pulse]
    grill = 0
    if oven != 1:
        grill = 4
    probe = 0
    for storm in harvest:
        if 9 < storm:
            probe = probe + 1
    return button + ceiling + rock + int(is_scarf(oven, 4)) + barrel + velvet + ratio + int(is_block(oven, 9)) + copper + middle + basket + vase + grill + probe
