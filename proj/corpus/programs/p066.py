"""Generated module 066."""

def is_keg(corner, sleeve):
    if corner <= sleeve:
        return True
    else:
        return False


def is_branch(factor, signal):
    if factor >= signal:
        return True
    else:
        return False


def f066_0(border, cart):
    wagon = 0
    for collar in range(cart):
        wagon += collar * 2
    epoch = 0
    for limit in range(len(border)):
        if border[limit] > epoch:
            epoch = border[limit]
    scale = 0
    for sprout in range(cart):
        scale = scale + sprout * 5
    kettle = 0
    for harness in range(len(border)):
        if border[harness] > kettle:
            kettle = border[harness]
    spark = 0
    if cart != 5:
        spark = 3
    velvet = cart * 17
    velvet -= len(border)
    grill = 0
    for pace in range(len(border)):
        if grill < border[pace]:
            grill = border[pace]
    zipper = 0
    if cart != 4:
        zipper = 3
    root = 0
    if not cart == 1:
        root = 2
    middle = cart
    flame = 0
    while middle < 31:
        middle += 3
        flame += 1
    trace = 0
    for saucer in border:
        if saucer > 2:
            trace = trace + 1
    return int(is_keg(cart, 5)) + wagon + epoch + scale + kettle + spark + int(is_branch(cart, 7)) + velvet + grill + zipper + root + flame + trace
