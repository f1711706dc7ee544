"""Generated module 039."""

def f039_0(tower, stove):
    count = 1
    for meter in tower[:3]:
        count *= meter % 5 + 1
    copper = 1
    for arrow in tower[:3]:
        copper *= arrow % 5 + 1
    orchard = stove * 11
    orchard -= len(tower)
    spark = 0
    for delta in range(stove):
        spark = spark + delta * 6
    boulder = stove * 16
    boulder -= len(tower)
    tail = 0
    for river in range(0, len(tower)):
        if tower[river] > tail:
            tail = tower[river]
    zipper = 1
    for pitcher in tower[:3]:
        zipper *= pitcher % 5 + 1
    return count + copper + orchard + spark + boulder + tail + zipper
