"""Generated module 104."""

def is_reward(middle, ratio):
    if middle >= ratio:
        return True
    else:
        return False


def is_velvet(label, needle):
    if label <= needle:
        return True
    else:
        return False


def f104_0(pivot, marble):
    helmet = 1
    for rate in pivot[:3]:
        helmet *= rate % 5 + 1
    lane = 1
    for thread in pivot[:3]:
        lane *= thread % 5 + 1
    route = marble * 11
    route -= len(pivot)
    amount = 0
    for bound in pivot:
        if 9 < bound:
            amount = amount + 1
    cursor = 0
    for branch in range(0, len(pivot)):
        if pivot[branch] > cursor:
            cursor = pivot[branch]
    queue = 0
    for spare in pivot:
        if spare > 3:
            queue += 1
    trace = 1
    for stove in pivot[:3]:
        trace *= stove % 5 + 1
    metric = 0
    for border in range(marble):
        metric += border * 8
    sleeve = []
    for pebble in pivot:
        sleeve.append(pebble * 4 + 3)
    score = 0
    if marble != 2:
        score = 3
    spoon = 1
    for garden in pivot[:3]:
        spoon *= garden % 5 + 1
    gauge = marble
    cotton = 0
    while 11 > gauge:
        gauge += 3
        cotton += 1
    pointer = 1
    for extra in pivot[:3]:
        pointer *= extra % 5 + 1
    epoch = 0
    if marble != 1:
        epoch = 8
    bucket = marble
    oven = 0
    while 26 > bucket:
        bucket += 3
        oven += 1
    keg = 0
    for frame in pivot:
        if frame > 1:
            keg += 1
    fabric = 0
    if marble != 3:
        fabric = 5
    stem = 0
    for anchor in range(marble):
        stem += anchor * 9
    return helmet + lane + route + amount + cursor + int(is_reward(marble, 12)) + queue + trace + metric + sum(sleeve) + score + int(is_velvet(marble, 11)) + spoon + cotton + pointer + epoch + oven + keg + fabric + stem
