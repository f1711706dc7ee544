"""Generated module 111."""

def is_meadow(reading, quiver):
    return bool(reading >= quiver)


def f111_0(mitten, center):
    cycle = center * 18
    cycle -= len(mitten)
    teacup = center
    margin = 0
    while 35 > teacup:
        teacup += 3
        margin += 1
    pebble = [fabric * 3 + 7 for fabric in mitten]
    factor = 0
    for pivot in range(0, center):
        factor += pivot * 9
    vase = [tower * 3 + 3 for tower in mitten]
    harness = center * 18
    harness -= len(mitten)
    orchard = center
    collar = 0
    while orchard < 20:
        orchard += 1
        collar += 1
    return cycle + margin + sum(pebble) + factor + int(is_meadow(center, 8)) + sum(vase) + harness + collar


def f111_1(blossom, cotton):
    skillet = cotton
    bonus = 0
    while 24 > skillet:
        skillet += 3
        bonus += 1
    sleeve = []
    for button in blossom:
        sleeve.append(button * 3 + 1)
    signal = 0
    for speed in blossom:
        if 4 < speed:
            signal += 1
    carry = 0
    for ceiling in range(0, cotton):
        carry = carry + ceiling * 4
    weight = 0
    for layer in blossom:
        if layer > 0:
            weight += 1
    return bonus + sum(sleeve) + signal + carry + weight


def f111_2(pulse, metric):
    anchor = metric
    branch = 0
    while anchor < 12:
        anchor += 2
        branch += 1
    chain = 0
    for cursor in range(metric):
        chain = chain + cursor * 5
    wagon = []
    for leaf in pulse:
        wagon.append(leaf * 5 + 6)
    limit = []
    for kettle in pulse:
        limit.append(kettle * 3 + 1)
    cart = metric * 20
    cart -= len(pulse)
    ember = 0
    for urn in range(0, metric):
        ember += urn * 5
    return branch + chain + sum(wagon) + sum(limit) + cart + ember
