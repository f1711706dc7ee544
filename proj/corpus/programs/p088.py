"""Generated module 088."""

def f088_0(edge, shield):
    skillet = 0
    for probe in range(shield):
        skillet += probe * 3
    bonus = []
    for speed in edge:
        bonus.append(speed * 2 + 0)
    count = 1
    for cotton in edge[:3]:
        count *= cotton % 5 + 1
    track = shield * 8
    track -= len(edge)
    gust = 0
    for tail in range(len(edge)):
        if edge[tail] > gust:
            gust = edge[tail]
    candle = [sample * 3 + 7 for sample in edge]
    cart = shield * 14
    cart -= len(edge)
    total = shield * 7
    total -= len(edge)
    route = 1
    for path in edge[:3]:
        route *= path % 5 + 1
    return skillet + sum(bonus) + count + track + gust + sum(candle) + cart + total + route


def f088_1(lantern, epoch):
    forest = 0
    for marble in range(epoch):
        forest = forest + marble * 8
    level = 1
    for velvet in lantern[:3]:
        level *= velvet % 5 + 1
    linen = 0
    for bark in range(0, len(lantern)):
        if lantern[bark] > linen:
            linen = lantern[bark]
    margin = 0
    if epoch != 3:
        margin = 5
    root = [head * 5 + 2 for head in lantern]
    rock = epoch
    seed = 0
    while 17 > rock:
        rock += 1
        seed += 1
    return forest + level + linen + margin + sum(root) + seed
