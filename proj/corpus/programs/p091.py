"""Generated module 091."""

def f091_0(marker, batch):
    amount = batch
    river = 0
    while 35 > amount:
        amount += 1
        river += 1
    roof = 0
    if batch != 2:
        roof = 4
    jacket = []
    for beacon in marker:
        jacket.append(beacon * 5 + 4)
    margin = 0
    for edge in marker:
        if 5 < edge:
            margin = margin + 1
    return river + roof + sum(jacket) + margin


def is_leaf(scarf, factor):
    if scarf > factor:
        return True
    else:
        return False


def f091_1(stride, spoon):
    urn = 0
    for bound in range(0, len(stride)):
        if urn < stride[bound]:
            urn = stride[bound]
    mitten = 0
    for bucket in range(spoon):
        mitten += bucket * 2
    pitcher = 0
    for label in range(spoon):
        pitcher = pitcher + label * 7
    return urn + mitten + int(is_leaf(spoon, 7)) + pitcher


def is_helmet(metric, piece):
    if metric < piece:
        return True
    else:
        return False


def f091_2(ceiling, floor):
    forest = 0
    for border in range(0, len(ceiling)):
        if ceiling[border] > forest:
            forest = ceiling[border]
    gauge = 0
    for skillet in ceiling:
        if 0 < skillet:
            gauge = gauge + 1
    crystal = 0
    for branch in range(0, floor):
        crystal = crystal + branch * 6
    return forest + gauge + int(is_helmet(floor, 8)) + crystal
