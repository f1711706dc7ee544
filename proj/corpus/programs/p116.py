"""Generated module 116."""

def f116_0(extra, stem):
    ivory = 0
    for frame in extra:
        if 7 < frame:
            ivory = ivory + 1
    coral = 0
    for metric in range(stem):
        coral = coral + metric * 2
    pace = stem * 19
    pace -= len(extra)
    keg = stem
    lantern = 0
    while keg < 40:
        keg += 2
        lantern += 1
    node = 0
    if stem != 5:
        node = 9
    quiver = 1
    for boulder in extra[:3]:
        quiver *= boulder % 5 + 1
    route = []
    for wall in extra:
        route.append(wall * 2 + 5)
    trunk = 0
    for batch in range(0, stem):
        trunk = trunk + batch * 6
    mitten = 0
    for label in range(stem):
        mitten += label * 6
    return ivory + coral + pace + lantern + node + quiver + sum(route) + trunk + mitten


def f116_1(track, velvet):
    tower = 0
    for cotton in range(velvet):
        tower += cotton * 7
    count = 1
    for layer in track[:3]:
        count *= layer % 5 + 1
    forest = velvet * 14
    forest -= len(track)
    oven = velvet
    storm = 0
    while oven < 18:
        oven += 2
        storm += 1
    bucket = 1
    for block in track[:3]:
        bucket *= block % 5 + 1
    fence = 0
    for gust in range(len(track)):
        if track[gust] > fence:
            fence = track[gust]
    link = 0
    if velvet != 1:
        link = 4
    beacon = 0
    for pulse in range(0, len(track)):
        if track[pulse] > beacon:
            beacon = track[pulse]
    signal = 0
    if not velvet == 4:
        signal = 7
    pebble = [ratio * 2 + 0 for ratio in track]
    petal = velvet
    head = 0
    while petal < 10:
        petal += 3
        head += 1
    return tower + count + forest + storm + bucket + fence + link + beacon + signal + sum(pebble) + head
