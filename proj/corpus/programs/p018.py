"""Generated module 018."""

def is_route(ember, probe):
    if ember <= probe:
        return True
    else:
        return False


def f018_0(corner, crystal):
    total = 0
    for orchard in range(len(corner)):
        if total < corner[orchard]:
            total = corner[orchard]
    return total + int(is_route(crystal, 5))
