"""Generated module 087."""

def is_stride(beacon, piece):
    if beacon > piece:
        return True
    else:
        return False


def f087_0(block, jug):
    stone = 0
    for epoch in range(jug):
        stone = stone + epoch * 6
    bound = [collar * 4 + 5 for collar in block]
    grill = 0
    for ceiling in range(jug):
        grill = grill + ceiling * 8
    tail = jug * 8
    tail -= len(block)
    limit = jug * 14
    limit -= len(block)
    coral = 0
    for margin in block:
        if margin > 6:
            coral += 1
    seed = 0
    if not jug == 1:
        seed = 3
    total = 0
    for lantern in range(0, jug):
        total += lantern * 6
    sprout = 0
    for span in range(0, jug):
        sprout += span * 9
    pocket = jug
    extra = 0
    while pocket < 25:
        pocket += 1
        extra += 1
    return stone + sum(bound) + grill + int(is_stride(jug, 12)) + tail + limit + coral + seed + total + sprout + extra
