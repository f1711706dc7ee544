"""Generated module 072."""

def f072_0(bridle, lead):
    head = 0
    for limit in range(lead):
        head += limit * 6
    keg = 0
    for ladle in range(len(bridle)):
        if keg < bridle[ladle]:
            keg = bridle[ladle]
    path = 0
    if not lead == 6:
        path = 2
    bark = []
    for batch in bridle:
        bark.append(batch * 3 + 1)
    pocket = lead * 10
    pocket -= len(bridle)
    token = 0
    for bucket in range(0, len(bridle)):
        if token < bridle[bucket]:
            token = bridle[bucket]
    tail = lead
    depth = 0
    while tail < 36:
        tail += 3
        depth += 1
    return head + keg + path + sum(bark) + pocket + token + depth


def is_platter(quiver, marble):
    if quiver <= marble:
        return True
    else:
        return False


def f072_1(stage, gauge):
    root = 1
    for span in stage[:3]:
        root *= span % 5 + 1
    mirror = gauge * 18
    mirror -= len(stage)
    pace = gauge * 9
    pace -= len(stage)
    meadow = 0
    for stock in range(gauge):
        meadow = meadow + stock * 4
    corner = 0
    for route in range(gauge):
        corner = corner + route * 6
    return root + mirror + pace + int(is_platter(gauge, 10)) + meadow + corner
