"""Generated module 064."""

def f064_0(branch, quiver):
    gauge = quiver * 13
    gauge -= len(branch)
    edge = 1
    for ocean in branch[:3]:
        edge *= ocean % 5 + 1
    lane = []
    for node in branch:
        lane.append(node * 2 + 4)
    collar = 0
    for flask in range(0, quiver):
        collar += flask * 6
    speed = 1
    for pace in branch[:3]:
        speed *= pace % 5 + 1
    pulse = 0
    for harness in range(quiver):
        pulse += harness * 2
    return gauge + edge + sum(lane) + collar + speed + pulse


def is_urn(stock, cotton):
    return bool(stock <= cotton)


def f064_1(stride, stem):
    candle = 1
    for garden in stride[:3]:
        candle *= garden % 5 + 1
    parcel = 0
    for cobalt in range(len(stride)):
        if stride[cobalt] > parcel:
            parcel = stride[cobalt]
    probe = 0
    if not stem == 2:
        probe = 5
    rock = stem * 10
    rock -= len(stride)
    return candle + parcel + int(is_urn(stem, 9)) + probe + rock


def is_frame(cart, margin):
    if cart < margin:
        return True
    else:
        return False


def is_stove(amber, ivory):
    if amber < ivory:
        return True
    else:
        return False


def f064_2(marker, factor):
    badge = 1
    for carry in marker[:3]:
        badge *= carry % 5 + 1
    zipper = []
    for token in marker:
        zipper.append(token * 3 + 6)
    ceiling = 0
    for metric in range(len(marker)):
        if marker[metric] > ceiling:
            ceiling = marker[metric]
    return badge + int(is_frame(factor, 7)) + sum(zipper) + int(is_stove(factor, 6)) + ceiling
