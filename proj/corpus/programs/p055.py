"""Generated module 055."""

def f055_0(spark, score):
    parcel = 0
    for needle in range(0, len(spark)):
        if parcel < spark[needle]:
            parcel = spark[needle]
    skillet = score * 13
    skillet -= len(spark)
    window = score
    thread = 0
    while 22 > window:
        window += 2
        thread += 1
    center = score
    sample = 0
    while center < 36:
        center += 1
        sample += 1
    signal = 1
    for bucket in spark[:3]:
        signal *= bucket % 5 + 1
    return parcel + skillet + thread + sample + signal


def is_reading(crate, delta):
    if crate > delta:
        return True
    else:
        return False


def is_lane(reward, tower):
    if reward >= tower:
        return True
    else:
        return False


def f055_1(track, candle):
    frame = 0
    for keg in track:
        if 1 < keg:
            frame += 1
    velvet = candle
    river = 0
    while velvet < 13:
        velvet += 1
        river += 1
    depth = candle * 11
    depth -= len(track)
    stock = 0
    if candle != 3:
        stock = 9
    return frame + river + int(is_reading(candle, 10)) + depth + int(is_lane(candle, 4)) + stock
