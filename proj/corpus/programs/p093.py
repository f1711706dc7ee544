"""Generated module 093."""

def is_trunk(breeze, river):
    if breeze > river:
        return True
    else:
        return False


def f093_0(pointer, token):
    goblet = token * 12
    goblet -= len(pointer)
    dust = token
    sprout = 0
    while 29 > dust:
        dust += 1
        sprout += 1
    ocean = 0
    for factor in range(0, len(pointer)):
        if ocean < pointer[factor]:
            ocean = pointer[factor]
    cart = 0
    for spark in pointer:
        if spark > 1:
            cart = cart + 1
    return goblet + sprout + ocean + int(is_trunk(token, 7)) + cart


def f093_1(stem, zipper):
    cobalt = 0
    for depth in range(0, len(stem)):
        if cobalt < stem[depth]:
            cobalt = stem[depth]
    shield = 1
    for margin in stem[:3]:
        shield *= margin % 5 + 1
    boulder = zipper
    grill = 0
    while boulder < 16:
        boulder += 3
        grill += 1
    ceiling = 0
    for silver in range(0, len(stem)):
        if ceiling < stem[silver]:
            ceiling = stem[silver]
    cursor = 1
    for arrow in stem[:3]:
        cursor *= arrow % 5 + 1
    return cobalt + shield + grill + ceiling + cursor
