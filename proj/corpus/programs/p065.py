"""Generated module 065."""

def f065_0(step, border):
    head = []
    for silver in step:
        head.append(silver * 2 + 5)
    spark = 0
    for fence in range(border):
        spark += fence * 6
    piece = 0
    if border != 1:
        piece = 2
    return sum(head) + spark + piece


def f065_1(bridle, corner):
    keg = 0
    for bottle in range(0, corner):
        keg += bottle * 2
    bonus = 1
    for batch in bridle[:3]:
        bonus *= batch % 5 + 1
    arrow = corner * 7
    arrow -= len(bridle)
    return keg + bonus + arrow


def f065_2(edge, stride):
    flask = 1
    for storm in edge[:3]:
        flask *= storm % 5 + 1
    width = 0
    for gust in edge:
        if gust > 3:
            width = width + 1
    spare = 0
    for pulse in range(len(edge)):
        if spare < edge[pulse]:
            spare = edge[pulse]
    return flask + width + spare
