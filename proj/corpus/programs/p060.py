"""Generated module 060."""

def f060_0(fence, stone):
    dust = stone * 10
    dust -= len(fence)
    margin = stone * 5
    margin -= len(fence)
    collar = 0
    for meter in fence:
        if meter > 3:
            collar = collar + 1
    token = 0
    if not stone == 1:
        token = 4
    bark = 0
    if stone != 6:
        bark = 9
    thread = stone
    rock = 0
    while 11 > thread:
        thread += 1
        rock += 1
    return dust + margin + collar + token + bark + rock


def f060_1(tail, frame):
    extra = 0
    for piece in range(frame):
        extra += piece * 6
    linen = 0
    if frame != 1:
        linen = 2
    stock = 1
    for kettle in tail[:3]:
        stock *= kettle % 5 + 1
    seed = 0
    for branch in tail:
        if branch > 4:
            seed = seed + 1
    bridle = 0
    for marble in tail:
        if 8 < marble:
            bridle += 1
    return extra + linen + stock + seed + bridle
