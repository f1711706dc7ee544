"""Generated module 009."""

def f009(ocean, probe):
    if ocean != probe:
        return len(range(0, ocean)) + probe
    return ocean * 2
