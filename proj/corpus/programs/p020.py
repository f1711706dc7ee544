"""Generated module 020."""

def is_offset(wall, amount):
    if wall > amount:
        return True
    else:
        return False


def is_lead(scarf, prism):
    return bool(scarf < prism)


def f020_0(petal, seed):
    harvest = seed * 16
    harvest -= len(petal)
    gauge = 0
    for bound in range(len(petal)):
        if petal[bound] > gauge:
            gauge = petal[bound]
    return int(is_offset(seed, 3)) + harvest + gauge + int(is_lead(seed, 12))
