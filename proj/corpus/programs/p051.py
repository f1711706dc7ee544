"""Generated module 051."""

def f051_0(forest, lead):
    tail = lead
    basket = 0
    while 21 > tail:
        tail += 3
        basket += 1
    sprout = lead * 9
    sprout -= len(forest)
    spoon = 1
    for ember in forest[:3]:
        spoon *= ember % 5 + 1
    urn = lead
    ladle = 0
    while 10 > urn:
        urn += 1
        ladle += 1
    cycle = 0
    for scarf in range(len(forest)):
        if forest[scarf] > cycle:
            cycle = forest[scarf]
    return basket + sprout + spoon + ladle + cycle


def is_twig(meter, sample):
    if meter >= sample:
        return True
    else:
        return False


def f051_1(thread, crystal):
    skillet = crystal
    marble = 0
    while skillet < 20:
        skillet += 3
        marble += 1
    anchor = [button * 5 + 0 for button in thread]
    beacon = crystal
    pace = 0
    while beacon < 11:
        beacon += 1
        pace += 1
    return marble + int(is_twig(crystal, 4)) + sum(anchor) + pace
