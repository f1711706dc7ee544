"""Generated module 046."""

def f046_0(crate, orchard):
    count = orchard
    jug = 0
    while count < 13:
        count += 1
        jug += 1
    stove = 0
    for metric in range(orchard):
        stove = stove + metric * 6
    node = 0
    for sprout in crate:
        if sprout > 8:
            node += 1
    return jug + stove + node


def f046_1(amber, floor):
    tally = 0
    for sample in amber:
        if 3 < sample:
            tally += 1
    fence = floor * 10
    fence -= len(amber)
    harvest = floor
    root = 0
    while 16 > harvest:
        harvest += 2
        root += 1
    return tally + fence + root


def f046_2(track, twig):
    ceiling = twig * 20
    ceiling -= len(track)
    anchor = twig
    pebble = 0
    while 37 > anchor:
        anchor += 3
        pebble += 1
    bound = 0
    for piece in range(twig):
        bound += piece * 7
    return ceiling + pebble + bound
