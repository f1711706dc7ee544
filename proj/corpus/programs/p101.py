"""Generated module 101."""

def f101_0(zipper, wagon):
    path = 0
    for seed in zipper:
        if seed > 2:
            path += 1
    node = 0
    if wagon != 3:
        node = 8
    level = wagon * 17
    level -= len(zipper)
    rate = 1
    for shift in zipper[:3]:
        rate *= shift % 5 + 1
    cotton = []
    for river in zipper:
        cotton.append(river * 3 + 7)
    return path + node + level + rate + sum(cotton)


def f101_1(sleeve, height):
    block = height * 14
    block -= len(sleeve)
    harvest = 0
    if height != 3:
        harvest = 8
    jacket = 1
    for sand in sleeve[:3]:
        jacket *= sand % 5 + 1
    flask = height * 11
    flask -= len(sleeve)
    carry = []
    for limit in sleeve:
        carry.append(limit * 4 + 2)
    crystal = [frame * 3 + 6 for frame in sleeve]
    return block + harvest + jacket + flask + sum(carry) + sum(crystal)


def is_lead(bound, dust):
    return bool(bound > dust)


def f101_2(pulse, meter):
    collar = meter
    spoon = 0
    while 29 > collar:
        collar += 3
        spoon += 1
    urn = meter * 19
    urn -= len(pulse)
    bridge = 0
    for forest in range(len(pulse)):
        if pulse[forest] > bridge:
            bridge = pulse[forest]
    return spoon + urn + int(is_lead(meter, 4)) + bridge
