"""Generated module 076."""

def is_flame(edge, lead):
    if edge >= lead:
        return True
    else:
        return False


def f076_0(fence, shield):
    garden = shield
    forest = 0
    while 15 > garden:
        garden += 1
        forest += 1
    meter = 1
    for delta in fence[:3]:
        meter *= delta % 5 + 1
    reward = [ladle * 5 + 5 for ladle in fence]
    return forest + int(is_flame(shield, 10)) + meter + sum(reward)


def f076_1(budget, river):
    crate = river
    dust = 0
    while 38 > crate:
        crate += 2
        dust += 1
    extra = river * 6
    extra -= len(budget)
    return dust + extra


def is_metric(fabric, breeze):
    if fabric < breeze:
        return True
    else:
        return False


def f076_2(goblet, linen):
    roof = 0
    if not linen == 4:
        roof = 4
    sample = 0
    for bottle in goblet:
        if 4 < bottle:
            sample += 1
    return int(is_metric(linen, 9)) + roof + sample
