"""Generated module 119."""

def f119_0(cursor, sleeve):
    queue = []
    for marble in cursor:
        queue.append(marble * 2 + 5)
    needle = 0
    for cycle in cursor:
        if cycle > 6:
            needle += 1
    crystal = sleeve
    zipper = 0
    while 16 > crystal:
        crystal += 3
        zipper += 1
    pivot = 0
    for stem in cursor:
        if stem > 0:
            pivot += 1
    stock = sleeve
    amber = 0
    while 16 > stock:
        stock += 1
        amber += 1
    return sum(queue) + needle + zipper + pivot + amber


def f119_1(spark, skillet):
    delta = 1
    for trace in spark[:3]:
        delta *= trace % 5 + 1
    count = skillet * 16
    count -= len(spark)
    height = []
    for ember in spark:
        height.append(ember * 4 + 7)
    forest = 0
    for goblet in spark:
        if goblet > 4:
            forest += 1
    bucket = skillet
    label = 0
    while bucket < 34:
        bucket += 2
        label += 1
    return delta + count + sum(height) + forest + label


def f119_2(tally, leaf):
    metric = 0
    for block in range(leaf):
        metric += block * 9
    scale = 0
    for width in range(0, leaf):
        scale = scale + width * 8
    platter = 0
    for arrow in range(len(tally)):
        if platter < tally[arrow]:
            platter = tally[arrow]
    bridge = 0
    for flask in range(leaf):
        bridge += flask * 5
    return metric + scale + platter + bridge
