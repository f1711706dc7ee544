"""Generated module 028."""

def is_prism(offset, branch):
    return bool(offset > branch)


def f028_0(stone, fabric):
    width = 1
    for orchard in stone[:3]:
        width *= orchard % 5 + 1
    cloud = fabric
    sleeve = 0
    while cloud < 21:
        cloud += 2
        sleeve += 1
    gauge = fabric
    ladle = 0
    while 23 > gauge:
        gauge += 1
        ladle += 1
    return int(is_prism(fabric, 11)) + width + sleeve + ladle
