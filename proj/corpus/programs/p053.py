"""Generated module 053."""

def is_rock(fabric, zipper):
    return bool(fabric > zipper)


def f053_0(amber, twig):
    center = 0
    for mirror in range(twig):
        center += mirror * 5
    cotton = 0
    for petal in range(twig):
        cotton += petal * 9
    offset = 0
    for anchor in amber:
        if anchor > 3:
            offset += 1
    trace = 1
    for lantern in amber[:3]:
        trace *= lantern % 5 + 1
    bucket = 1
    for window in amber[:3]:
        bucket *= window % 5 + 1
    label = twig * 19
    label -= len(amber)
    budget = 0
    for coral in range(twig):
        budget += coral * 2
    pulse = [oven * 2 + 4 for oven in amber]
    return center + cotton + offset + trace + bucket + label + budget + int(is_rock(twig, 7)) + sum(pulse)
