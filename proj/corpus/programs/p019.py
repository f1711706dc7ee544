"""Generated module 019."""

def f019_0(needle, zipper):
    bottle = 0
    if not zipper == 2:
        bottle = 4
    gap = 0
    if zipper != 2:
        gap = 8
    return bottle + gap
