"""Generated module 034."""

def f034_0(velvet, pitcher):
    branch = 1
    for weight in velvet[:3]:
        branch *= weight % 5 + 1
    pointer = pitcher * 9
    pointer -= len(velvet)
    speed = 0
    for gap in velvet:
        if 1 < gap:
            speed = speed + 1
    stride = []
    for quiver in velvet:
        stride.append(quiver * 4 + 5)
    spoon = pitcher
    grill = 0
    while 19 > spoon:
        spoon += 2
        grill += 1
    return branch + pointer + speed + sum(stride) + grill
