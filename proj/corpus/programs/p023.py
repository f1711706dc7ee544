"""Generated module 023."""

def f023_0(path, seed):
    window = []
    for budget in path:
        window.append(budget * 4 + 7)
    queue = 0
    if seed != 4:
        queue = 4
    height = 0
    if not seed == 2:
        height = 7
    factor = 0
    if not seed == 5:
        factor = 9
    return sum(window) + queue + height + factor
