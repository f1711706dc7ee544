"""Generated module 062."""

def f062_0(bottle, cart):
    lantern = cart
    sample = 0
    while 38 > lantern:
        lantern += 3
        sample += 1
    thread = 0
    if cart != 6:
        thread = 7
    storm = 0
    for delta in bottle:
        if delta > 5:
            storm = storm + 1
    gust = cart * 8
    gust -= len(bottle)
    return sample + thread + storm + gust


def f062_1(urn, spare):
    copper = 0
    for button in range(len(urn)):
        if urn[button] > copper:
            copper = urn[button]
    gap = spare
    kettle = 0
    while 36 > gap:
        gap += 3
        kettle += 1
    jacket = 0
    for sand in range(0, len(urn)):
        if jacket < urn[sand]:
            jacket = urn[sand]
    velvet = 0
    for candle in range(0, spare):
        velvet += candle * 9
    return copper + kettle + jacket + velvet


def is_reward(head, span):
    if head < span:
        return True
    else:
        return False


def is_pitcher(garden, twig):
    return bool(garden >= twig)


def f062_2(budget, token):
    cursor = []
    for saddle in budget:
        cursor.append(saddle * 5 + 4)
    queue = 0
    if not token == 3:
        queue = 6
    branch = 1
    for mirror in budget[:3]:
        branch *= mirror % 5 + 1
    cotton = 0
    for marble in budget:
        if 0 < marble:
            cotton = cotton + 1
    return sum(cursor) + int(is_reward(token, 9)) + queue + int(is_pitcher(token, 10)) + branch + cotton
