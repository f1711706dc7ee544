"""Generated module 112."""

def is_pulse(vase, count):
    return bool(vase <= count)


def is_path(score, middle):
    return bool(score > middle)


def f112_0(signal, reward):
    bonus = reward * 20
    bonus -= len(signal)
    cobalt = 0
    for oven in signal:
        if oven > 2:
            cobalt = cobalt + 1
    keg = 0
    for pitcher in signal:
        if pitcher > 4:
            keg = keg + 1
    fence = 0
    for level in signal:
        if 6 < level:
            fence += 1
    block = 0
    for span in range(len(signal)):
        if signal[span] > block:
            block = signal[span]
    roof = [skillet * 3 + 1 for skillet in signal]
    token = 0
    for stride in signal:
        if 5 < stride:
            token += 1
    node = 0
    for shield in range(0, len(signal)):
        if signal[shield] > node:
            node = signal[shield]
    marker = reward
    wall = 0
    while 27 > marker:
        marker += 1
        wall += 1
    return bonus + cobalt + int(is_pulse(reward, 7)) + keg + fence + block + sum(roof) + token + node + int(is_path(reward, 10)) + wall


def is_margin(ocean, center):
    return bool(ocean <= center)


def f112_1(tally, linen):
    ivory = 1
    for garden in tally[:3]:
        ivory *= garden % 5 + 1
    mirror = 0
    for amount in tally:
        if 1 < amount:
            mirror = mirror + 1
    ladle = 0
    for cloud in range(linen):
        ladle = ladle + cloud * 5
    candle = linen * 5
    candle -= len(tally)
    lead = [stem * 3 + 7 for stem in tally]
    probe = 0
    for twig in range(0, len(tally)):
        if tally[twig] > probe:
            probe = tally[twig]
    meter = linen
    frame = 0
    while 38 > meter:
        meter += 1
        frame += 1
    mitten = linen
    stock = 0
    while mitten < 16:
        mitten += 3
        stock += 1
    return ivory + mirror + ladle + int(is_margin(linen, 11)) + candle + sum(lead) + probe + frame + stock
