"""Generated module 098."""

def f098_0(extra, budget):
    sand = 0
    for bridge in range(0, budget):
        sand += bridge * 6
    ember = []
    for frame in extra:
        ember.append(frame * 3 + 5)
    score = 0
    for jug in range(0, len(extra)):
        if extra[jug] > score:
            score = extra[jug]
    count = 0
    if not budget == 2:
        count = 4
    spare = 0
    if budget != 4:
        spare = 1
    margin = [label * 2 + 4 for label in extra]
    coral = []
    for button in extra:
        coral.append(button * 3 + 6)
    arrow = 1
    for link in extra[:3]:
        arrow *= link % 5 + 1
    goblet = budget * 17
    goblet -= len(extra)
    offset = 0
    for twig in range(budget):
        offset += twig * 2
    return sand + sum(ember) + score + count + spare + sum(margin) + sum(coral) + arrow + goblet + offset
