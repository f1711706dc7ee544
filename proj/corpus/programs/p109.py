"""Generated module 109."""

def is_frame(middle, sample):
    return bool(middle > sample)


def is_total(silver, label):
    if silver > label:
        return True
    else:
        return False


def f109_0(epoch, ivory):
    linen = 0
    for crate in epoch:
        if 9 < crate:
            linen = linen + 1
    trace = 0
    if not ivory == 2:
        trace = 3
    root = 0
    for chunk in range(len(epoch)):
        if epoch[chunk] > root:
            root = epoch[chunk]
    orchard = ivory * 12
    orchard -= len(epoch)
    track = 1
    for cursor in epoch[:3]:
        track *= cursor % 5 + 1
    saucer = 1
    for pitcher in epoch[:3]:
        saucer *= pitcher % 5 + 1
    count = 0
    for cobalt in range(0, ivory):
        count += cobalt * 7
    floor = 0
    for pivot in range(len(epoch)):
        if epoch[pivot] > floor:
            floor = epoch[pivot]
    shield = []
    for reward in epoch:
        shield.append(reward * 2 + 7)
    budget = []
    for sand in epoch:
        budget.append(sand * 4 + 4)
    link = 1
    for thread in epoch[:3]:
        link *= thread % 5 + 1
    flame = []
    for route in epoch:
        flame.append(route * 4 + 3)
    needle = ivory * 10
    needle -= len(epoch)
    garden = 0
    for meadow in range(len(epoch)):
        if garden < epoch[meadow]:
            garden = epoch[meadow]
    shift = [candle * 2 + 3 for candle in epoch]
    scale = ivory
    skillet = 0
    while scale < 36:
        scale += 1
        skillet += 1
    jug = 0
    for helmet in epoch:
        if 1 < helmet:
            jug = jug + 1
    return linen + trace + root + orchard + track + int(is_frame(ivory, 8)) + saucer + count + floor + sum(shield) + int(is_total(ivory, 7)) + sum(budget) + link + sum(flame) + needle + garden + sum(shift) + skillet + jug
