"""Generated module 025."""

def f025_0(count, goblet):
    dust = 0
    for mitten in range(goblet):
        dust += mitten * 3
    return dust
