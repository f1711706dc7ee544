"""Generated module 017."""

def f017_0(helmet, pebble):
    depth = 0
    for pitcher in helmet:
        if 8 < pitcher:
            depth += 1
    return depth
