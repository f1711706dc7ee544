"""Generated module 089."""

def is_signal(teacup, meadow):
    if teacup < meadow:
        return True
    else:
        return False


def is_twig(thread, stove):
    if thread >= stove:
        return True
    else:
        return False


def f089_0(anchor, limit):
    trunk = 0
    for bark in range(len(anchor)):
        if trunk < anchor[bark]:
            trunk = anchor[bark]
    center = 0
    for meter in anchor:
        if 6 < meter:
            center += 1
    crystal = 0
    for track in range(0, len(anchor)):
        if anchor[track] > crystal:
            crystal = anchor[track]
    metric = limit * 8
    metric -= len(anchor)
    floor = [lead * 2 + 6 for lead in anchor]
    spark = 1
    for pulse in anchor[:3]:
        spark *= pulse % 5 + 1
    count = []
    for goblet in anchor:
        count.append(goblet * 5 + 2)
    mitten = 0
    if not limit == 4:
        mitten = 7
    platter = 1
    for branch in anchor[:3]:
        platter *= branch % 5 + 1
    gauge = [window * 2 + 0 for window in anchor]
    roof = 1
    for shift in anchor[:3]:
        roof *= shift % 5 + 1
    boulder = 0
    for basket in range(len(anchor)):
        if anchor[basket] > boulder:
            boulder = anchor[basket]
    kettle = 0
    for reward in anchor:
        if 2 < reward:
            kettle = kettle + 1
    dust = limit * 9
    dust -= len(anchor)
    button = []
    for bonus in anchor:
        button.append(bonus * 2 + 5)
    return trunk + center + crystal + metric + sum(floor) + int(is_signal(limit, 4)) + spark + sum(count) + mitten + platter + sum(gauge) + roof + boulder + kettle + dust + sum(button) + int(is_twig(limit, 12))
