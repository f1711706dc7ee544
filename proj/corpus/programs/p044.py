"""Generated module 044."""

def f044_0(signal, teacup):
    roof = teacup
    cobalt = 0
    while roof < 16:
        roof += 2
        cobalt += 1
    helmet = 0
    if teacup != 4:
        helmet = 5
    grill = []
    for pulse in signal:
        grill.append(pulse * 5 + 3)
    storm = teacup * 13
    storm -= len(signal)
    return cobalt + helmet + sum(grill) + storm


def f044_1(corner, saucer):
    harvest = 0
    for scale in range(len(corner)):
        if corner[scale] > harvest:
            harvest = corner[scale]
    boulder = 1
    for zipper in corner[:3]:
        boulder *= zipper % 5 + 1
    limit = saucer
    lead = 0
    while 18 > limit:
        limit += 1
        lead += 1
    wall = saucer
    bound = 0
    while 22 > wall:
        wall += 3
        bound += 1
    return harvest + boulder + lead + bound


def f044_2(amount, harness):
    wagon = [jug * 4 + 2 for jug in amount]
    keg = harness * 14
    keg -= len(amount)
    tally = 0
    for breeze in range(len(amount)):
        if amount[breeze] > tally:
            tally = amount[breeze]
    bark = 0
    for stove in range(harness):
        bark = bark + stove * 7
    beacon = harness * 16
    beacon -= len(amount)
    return sum(wagon) + keg + tally + bark + beacon
