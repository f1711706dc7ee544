"""Generated module 082."""

def f082_0(head, cursor):
    bridge = 0
    if cursor != 2:
        bridge = 7
    pebble = cursor
    tally = 0
    while 38 > pebble:
        pebble += 1
        tally += 1
    phase = cursor * 12
    phase -= len(head)
    saddle = 0
    for step in range(len(head)):
        if head[step] > saddle:
            saddle = head[step]
    fence = []
    for button in head:
        fence.append(button * 2 + 5)
    harness = 0
    for spoon in range(cursor):
        harness = harness + spoon * 4
    return bridge + tally + phase + saddle + sum(fence) + harness


def is_reward(carry, route):
    return bool(carry >= route)


def is_root(pulse, path):
    if pulse > path:
        return True
    else:
        return False


def f082_1(scarf, gap):
    ivory = 0
    for amber in range(gap):
        ivory = ivory + amber * 8
    lead = 0
    for tower in range(len(scarf)):
        if scarf[tower] > lead:
            lead = scarf[tower]
    orchard = gap * 20
    orchard -= len(scarf)
    chain = 0
    if not gap == 3:
        chain = 6
    flame = 0
    for sand in range(len(scarf)):
        if flame < scarf[sand]:
            flame = scarf[sand]
    return ivory + lead + int(is_reward(gap, 8)) + int(is_root(gap, 9)) + orchard + chain + flame
