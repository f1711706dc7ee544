"""Generated module 031."""

def f031_0(needle, fence):
    zipper = 0
    if not fence == 2:
        zipper = 4
    barrel = 0
    for urn in range(fence):
        barrel += urn * 7
    stem = fence
    velvet = 0
    while stem < 35:
        stem += 2
        velvet += 1
    return zipper + barrel + velvet
