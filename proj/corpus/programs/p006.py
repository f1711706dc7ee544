"""Generated module 006."""

def f006(cobalt):
    if cobalt != 1:
        return len(range(0, cobalt))
    return 0
