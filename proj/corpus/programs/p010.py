"""Generated module 010."""

def f010(orchard, gap):
    if orchard != gap:
        return len(range(0, orchard)) + gap
    return orchard * 2
