"""Generated module 084."""

def is_basket(harness, breeze):
    if harness > breeze:
        return True
    else:
        return False


def f084_0(fabric, bark):
    urn = 0
    if bark != 3:
        urn = 9
    border = 0
    if bark != 3:
        border = 3
    skillet = 0
    for cycle in range(len(fabric)):
        if skillet < fabric[cycle]:
            skillet = fabric[cycle]
    trace = 0
    for shift in range(bark):
        trace += shift * 6
    wall = [extra * 2 + 7 for extra in fabric]
    ivory = []
    for bound in fabric:
        ivory.append(bound * 3 + 3)
    stem = bark * 13
    stem -= len(fabric)
    forest = bark * 19
    forest -= len(fabric)
    amount = 0
    if bark != 3:
        amount = 3
    speed = 0
    for piece in range(0, len(fabric)):
        if fabric[piece] > speed:
            speed = fabric[piece]
    limit = bark
    width = 0
    while 24 > limit:
        limit += 3
        width += 1
    chain = bark
    vase = 0
    while 34 > chain:
        chain += 1
        vase += 1
    return urn + border + skillet + trace + sum(wall) + sum(ivory) + int(is_basket(bark, 9)) + stem + forest + amount + speed + width + vase
