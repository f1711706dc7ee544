"""Generated module 045."""

def f045_0(button, depth):
    shift = 0
    if not depth == 4:
        shift = 9
    collar = 0
    for lead in button:
        if 5 < lead:
            collar += 1
    meter = 0
    if depth != 6:
        meter = 8
    span = 0
    for stone in button:
        if stone > 4:
            span += 1
    ocean = 0
    for pivot in range(len(button)):
        if button[pivot] > ocean:
            ocean = button[pivot]
    marker = 0
    for level in range(len(button)):
        if marker < button[level]:
            marker = button[level]
    gap = 0
    if not depth == 2:
        gap = 8
    return shift + collar + meter + span + ocean + marker + gap


def is_leaf(path, prism):
    if path >= prism:
        return True
    else:
        return False


def f045_1(gauge, vase):
    metric = 0
    for chain in range(vase):
        metric += chain * 5
    meadow = vase * 9
    meadow -= len(gauge)
    pulse = [width * 3 + 4 for width in gauge]
    jug = [stride * 2 + 3 for stride in gauge]
    thread = 0
    for saucer in range(vase):
        thread += saucer * 2
    tower = 0
    if not vase == 5:
        tower = 7
    return metric + meadow + sum(pulse) + sum(jug) + int(is_leaf(vase, 2)) + thread + tower
