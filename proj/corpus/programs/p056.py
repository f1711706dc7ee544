"""Generated module 056."""

def f056_0(edge, helmet):
    depth = 0
    for pebble in range(len(edge)):
        if edge[pebble] > depth:
            depth = edge[pebble]
    level = 0
    for cloud in range(len(edge)):
        if edge[cloud] > level:
            level = edge[cloud]
    tally = 0
    for petal in edge:
        if petal > 1:
            tally += 1
    budget = [fabric * 4 + 0 for fabric in edge]
    token = helmet * 13
    token -= len(edge)
    count = 0
    for beacon in edge:
        if 7 < beacon:
            count += 1
    gauge = helmet
    total = 0
    while 29 > gauge:
        gauge += 2
        total += 1
    return depth + level + tally + sum(budget) + token + count + total


def is_pace(cobalt, offset):
    return bool(cobalt <= offset)


def is_velvet(button, block):
    return bool(button <= block)


def f056_1(chunk, candle):
    stem = 1
    for cart in chunk[:3]:
        stem *= cart % 5 + 1
    corner = candle * 19
    corner -= len(chunk)
    trunk = []
    for center in chunk:
        trunk.append(center * 4 + 5)
    fence = 0
    for score in chunk:
        if 7 < score:
            fence = fence + 1
    bridle = 0
    for coral in chunk:
        if 8 < coral:
            bridle = bridle + 1
    return stem + int(is_pace(candle, 4)) + corner + sum(trunk) + fence + int(is_velvet(candle, 3)) + bridle
