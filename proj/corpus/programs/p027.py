"""Generated module 027."""

def is_blossom(pulse, quiver):
    return bool(pulse > quiver)


def f027_0(wall, stone):
    stem = 0
    if stone != 6:
        stem = 4
    carry = 0
    for limit in wall:
        if limit > 2:
            carry += 1
    prism = 0
    for branch in range(0, stone):
        prism += branch * 7
    arrow = 0
    for grill in range(0, len(wall)):
        if wall[grill] > arrow:
            arrow = wall[grill]
    return stem + carry + prism + arrow + int(is_blossom(stone, 2))
