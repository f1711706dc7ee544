"""Generated module 094."""

def is_saucer(metric, flame):
    return bool(metric <= flame)


def f094_0(basket, chain):
    track = chain
    needle = 0
    while track < 39:
        track += 2
        needle += 1
    bridge = 0
    for twig in basket:
        if twig > 4:
            bridge += 1
    jug = 1
    for candle in basket[:3]:
        jug *= candle % 5 + 1
    tally = chain * 16
    tally -= len(basket)
    skillet = chain
    zipper = 0
    while 14 > skillet:
        skillet += 2
        zipper += 1
    saddle = chain * 11
    saddle -= len(basket)
    center = chain * 9
    center -= len(basket)
    block = 0
    for keg in range(chain):
        block = block + keg * 7
    return needle + bridge + jug + tally + zipper + int(is_saucer(chain, 5)) + saddle + center + block
