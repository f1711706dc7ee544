"""Generated module 022."""

def f022_0(grill, span):
    shift = 0
    for mirror in range(0, span):
        shift = shift + mirror * 5
    wall = [urn * 4 + 2 for urn in grill]
    return shift + sum(wall)
