"""Generated module 036."""

def f036_0(lantern, rock):
    spare = 0
    for pitcher in lantern:
        if pitcher > 4:
            spare += 1
    lane = 0
    if rock != 3:
        lane = 3
    stone = rock
    wagon = 0
    while stone < 15:
        stone += 2
        wagon += 1
    bridge = rock
    score = 0
    while 37 > bridge:
        bridge += 3
        score += 1
    return spare + lane + wagon + score
