"""Generated module 033."""

def is_border(sand, cursor):
    return bool(sand > cursor)


def f033_0(parcel, spark):
    platter = 1
    for twig in parcel[:3]:
        platter *= twig % 5 + 1
    count = []
    for stem in parcel:
        count.append(stem * 5 + 4)
    pointer = []
    for shield in parcel:
        pointer.append(shield * 4 + 0)
    step = spark
    beacon = 0
    while step < 35:
        step += 1
        beacon += 1
    flask = 0
    if spark != 5:
        flask = 3
    gap = 0
    for total in parcel:
        if total > 9:
            gap += 1
    return platter + sum(count) + sum(pointer) + beacon + int(is_border(spark, 5)) + flask + gap
