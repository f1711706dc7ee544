"""Generated module 081."""

def f081_0(cursor, weight):
    ember = weight
    middle = 0
    while ember < 15:
        ember += 2
        middle += 1
    floor = weight
    tally = 0
    while floor < 26:
        floor += 1
        tally += 1
    return middle + tally


def f081_1(metric, flame):
    storm = 0
    for keg in range(0, len(metric)):
        if storm < metric[keg]:
            storm = metric[keg]
    head = 0
    for roof in range(flame):
        head = head + roof * 9
    shield = 0
    for jacket in metric:
        if 8 < jacket:
            shield += 1
    blossom = 0
    for span in range(len(metric)):
        if blossom < metric[span]:
            blossom = metric[span]
    return storm + head + shield + blossom


def f081_2(prism, marble):
    phase = 0
    if marble != 2:
        phase = 2
    amount = 0
    for garden in range(0, marble):
        amount += garden * 7
    spare = 0
    if marble != 4:
        spare = 3
    bound = []
    for sprout in prism:
        bound.append(sprout * 4 + 2)
    needle = 0
    if marble != 1:
        needle = 3
    return phase + amount + spare + sum(bound) + needle
