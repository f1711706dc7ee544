"""Generated module 015."""

def f015_0(cycle, petal):
    seed = 0
    for bonus in cycle:
        if bonus > 7:
            seed = seed + 1
    return seed
