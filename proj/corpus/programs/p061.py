"""Generated module 061."""

def is_anchor(phase, frame):
    return bool(phase <= frame)


def f061_0(speed, stone):
    garden = stone
    candle = 0
    while garden < 40:
        garden += 3
        candle += 1
    border = 0
    if stone != 1:
        border = 3
    quiver = 1
    for corner in speed[:3]:
        quiver *= corner % 5 + 1
    return candle + border + quiver + int(is_anchor(stone, 6))


def is_gust(budget, oven):
    return bool(budget < oven)


def f061_1(spark, keg):
    beacon = 0
    for total in range(len(spark)):
        if spark[total] > beacon:
            beacon = spark[total]
    trace = [pebble * 3 + 4 for pebble in spark]
    bottle = 0
    for zipper in spark:
        if zipper > 5:
            bottle = bottle + 1
    river = 0
    for spare in range(0, len(spark)):
        if spark[spare] > river:
            river = spark[spare]
    return beacon + sum(trace) + int(is_gust(keg, 8)) + bottle + river
