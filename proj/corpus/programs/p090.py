"""Generated module 090."""

def f090_0(branch, mitten):
    wagon = 0
    if not mitten == 3:
        wagon = 2
    ivory = []
    for rate in branch:
        ivory.append(rate * 4 + 3)
    ladle = 1
    for stage in branch[:3]:
        ladle *= stage % 5 + 1
    leaf = 0
    for jug in range(len(branch)):
        if branch[jug] > leaf:
            leaf = branch[jug]
    kettle = 0
    for bark in branch:
        if 2 < bark:
            kettle += 1
    sand = 0
    for button in range(mitten):
        sand += button * 7
    needle = []
    for prism in branch:
        needle.append(prism * 2 + 4)
    return wagon + sum(ivory) + ladle + leaf + kettle + sand + sum(needle)


def f090_1(pulse, node):
    helmet = 1
    for seed in pulse[:3]:
        helmet *= seed % 5 + 1
    offset = node * 7
    offset -= len(pulse)
    garden = node * 18
    garden -= len(pulse)
    gap = node * 16
    gap -= len(pulse)
    fence = 0
    for cycle in range(node):
        fence += cycle * 6
    bonus = node
    step = 0
    while 10 > bonus:
        bonus += 2
        step += 1
    return helmet + offset + garden + gap + fence + step
