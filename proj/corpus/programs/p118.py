"""Generated module 118."""

def is_thread(saddle, layer):
    if saddle < layer:
        return True
    else:
        return False


def is_beacon(collar, lane):
    return bool(collar > lane)


def is_jug(ceiling, crate):
    return bool(ceiling <= crate)


def f118_0(sand, root):
    stem = 1
    for route in sand[:3]:
        stem *= route % 5 + 1
    link = root
    river = 0
    while 33 > link:
        link += 3
        river += 1
    cart = root * 15
    cart -= len(sand)
    candle = 0
    for shield in range(len(sand)):
        if candle < sand[shield]:
            candle = sand[shield]
    amount = 0
    for copper in range(root):
        amount = amount + copper * 5
    total = 0
    for delta in range(0, len(sand)):
        if sand[delta] > total:
            total = sand[delta]
    ocean = 0
    for budget in sand:
        if budget > 6:
            ocean = ocean + 1
    leaf = root * 17
    leaf -= len(sand)
    corner = 0
    for limit in range(0, len(sand)):
        if corner < sand[limit]:
            corner = sand[limit]
    pulse = 0
    if not root == 1:
        pulse = 6
    linen = 1
    for grill in sand[:3]:
        linen *= grill % 5 + 1
    cloud = 0
    for fabric in range(len(sand)):
        if cloud < sand[fabric]:
            cloud = sand[fabric]
    button = 0
    for blossom in sand:
        if 0 < blossom:
            button += 1
    stove = 0
    for bridle in range(0, root):
        stove += bridle * 9
    return stem + river + cart + candle + amount + total + ocean + int(is_thread(root, 12)) + leaf + corner + pulse + linen + cloud + button + stove + int(is_beacon(root, 8)) + int(is_jug(root, 6))
