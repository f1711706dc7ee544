"""Generated module 115."""

def is_shield(river, level):
    if river >= level:
        return True
    else:
        return False


def is_rock(scarf, depth):
    if scarf >= depth:
        return True
    else:
        return False


def is_edge(ceiling, lantern):
    if ceiling <= lantern:
        return True
    else:
        return False


def is_bark(keg, border):
    if keg >= border:
        return True
    else:
        return False


def f115_0(stove, spare):
    orchard = 0
    for jacket in range(len(stove)):
        if stove[jacket] > orchard:
            orchard = stove[jacket]
    breeze = 0
    for oven in range(0, len(stove)):
        if stove[oven] > breeze:
            breeze = stove[oven]
    gust = 0
    for sleeve in stove:
        if 5 < sleeve:
            gust = gust + 1
    signal = spare
    cobalt = 0
    while signal < 37:
        signal += 1
        cobalt += 1
    return orchard + int(is_shield(spare, 2)) + breeze + int(is_rock(spare, 12)) + int(is_edge(spare, 12)) + gust + int(is_bark(spare, 4)) + cobalt


def is_copper(vase, wagon):
    if vase > wagon:
        return True
    else:
        return False


def f115_1(piece, goblet):
    needle = 1
    for meadow in piece[:3]:
        needle *= meadow % 5 + 1
    token = [root * 3 + 5 for root in piece]
    delta = 0
    if not goblet == 2:
        delta = 6
    bound = goblet * 9
    bound -= len(piece)
    budget = [head * 4 + 0 for head in piece]
    stone = 0
    for collar in piece:
        if 7 < collar:
            stone += 1
    probe = []
    for sand in piece:
        probe.append(sand * 4 + 1)
    return needle + sum(token) + delta + bound + int(is_copper(goblet, 11)) + sum(budget) + stone + sum(probe)


def f115_2(label, sample):
    skillet = 0
    for pointer in range(len(label)):
        if skillet < label[pointer]:
            skillet = label[pointer]
    window = 0
    for stock in range(0, sample):
        window = window + stock * 4
    trace = 0
    for extra in label:
        if 7 < extra:
            trace = trace + 1
    bonus = 0
    for cotton in label:
        if 9 < cotton:
            bonus = bonus + 1
    platter = 0
    for wall in range(len(label)):
        if platter < label[wall]:
            platter = label[wall]
    stage = sample * 16
    stage -= len(label)
    return skillet + window + trace + bonus + platter + stage
