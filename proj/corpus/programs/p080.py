"""Generated module 080."""

def f080_0(corner, saucer):
    shift = []
    for center in corner:
        shift.append(center * 2 + 4)
    node = [bound * 5 + 6 for bound in corner]
    tower = 0
    for factor in corner:
        if factor > 4:
            tower += 1
    window = 1
    for height in corner[:3]:
        window *= height % 5 + 1
    orchard = saucer * 18
    orchard -= len(corner)
    count = 1
    for route in corner[:3]:
        count *= route % 5 + 1
    cloud = 0
    if saucer != 5:
        cloud = 5
    garden = saucer * 20
    garden -= len(corner)
    meter = 0
    if not saucer == 5:
        meter = 7
    fabric = saucer * 16
    fabric -= len(corner)
    frame = 0
    if not saucer == 2:
        frame = 4
    return sum(shift) + sum(node) + tower + window + orchard + count + cloud + garden + meter + fabric + frame
