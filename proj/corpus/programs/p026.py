"""Generated module 026."""

def is_bridle(meter, pointer):
    if meter > pointer:
        return True
    else:
        return False


def f026_0(reward, blossom):
    carry = blossom
    skillet = 0
    while 16 > carry:
        carry += 1
        skillet += 1
    cart = blossom
    forest = 0
    while 17 > cart:
        cart += 3
        forest += 1
    boulder = 1
    for vase in reward[:3]:
        boulder *= vase % 5 + 1
    return skillet + int(is_bridle(blossom, 6)) + forest + boulder
