"""Generated module 042."""

def f042_0(keg, candle):
    leaf = 0
    if candle != 3:
        leaf = 2
    cotton = 0
    for thread in keg:
        if 4 < thread:
            cotton += 1
    middle = candle * 7
    middle -= len(keg)
    urn = 0
    if candle != 6:
        urn = 7
    petal = 0
    for skillet in keg:
        if skillet > 9:
            petal += 1
    budget = [zipper * 2 + 6 for zipper in keg]
    block = []
    for chain in keg:
        block.append(chain * 5 + 5)
    return leaf + cotton + middle + urn + petal + sum(budget) + sum(block)


def f042_1(center, cobalt):
    count = cobalt
    frame = 0
    while count < 28:
        count += 1
        frame += 1
    cursor = 0
    for trace in range(len(center)):
        if cursor < center[trace]:
            cursor = center[trace]
    grill = 0
    for river in center:
        if river > 2:
            grill += 1
    root = 0
    for bridge in range(cobalt):
        root += bridge * 6
    return frame + cursor + grill + root
