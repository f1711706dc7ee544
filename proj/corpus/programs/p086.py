"""Generated module 086."""

def is_mirror(flask, prism):
    return bool(flask < prism)


def f086_0(bridle, lantern):
    anchor = 1
    for needle in bridle[:3]:
        anchor *= needle % 5 + 1
    stem = lantern
    span = 0
    while 40 > stem:
        stem += 2
        span += 1
    twig = 1
    for tail in bridle[:3]:
        twig *= tail % 5 + 1
    delta = 1
    for signal in bridle[:3]:
        delta *= signal % 5 + 1
    storm = 0
    for meter in range(len(bridle)):
        if bridle[meter] > storm:
            storm = bridle[meter]
    garden = 0
    for helmet in range(0, lantern):
        garden += helmet * 4
    ivory = 0
    for link in range(lantern):
        ivory += link * 5
    sprout = 1
    for track in bridle[:3]:
        sprout *= track % 5 + 1
    sand = [branch * 2 + 3 for branch in bridle]
    reward = 1
    for keg in bridle[:3]:
        reward *= keg % 5 + 1
    trace = lantern * 14
    trace -= len(bridle)
    gust = lantern
    chunk = 0
    while gust < 35:
        gust += 1
        chunk += 1
    return int(is_mirror(lantern, 5)) + anchor + span + twig + delta + storm + garden + ivory + sprout + sum(sand) + reward + trace + chunk
