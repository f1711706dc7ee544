"""Generated module 108."""

def is_metric(linen, center):
    return bool(linen >= center)


def f108_0(tower, cloud):
    frame = 0
    if cloud != 1:
        frame = 9
    score = 0
    for block in range(cloud):
        score += block * 6
    thread = cloud * 16
    thread -= len(tower)
    harvest = cloud * 19
    harvest -= len(tower)
    corner = 0
    for lead in tower:
        if 7 < lead:
            corner += 1
    return int(is_metric(cloud, 4)) + frame + score + thread + harvest + corner


def f108_1(blossom, flame):
    forest = 0
    for crystal in range(flame):
        forest += crystal * 8
    jug = [width * 2 + 6 for width in blossom]
    window = flame
    cycle = 0
    while 37 > window:
        window += 3
        cycle += 1
    petal = []
    for amount in blossom:
        petal.append(amount * 2 + 0)
    kettle = flame * 14
    kettle -= len(blossom)
    return forest + sum(jug) + cycle + sum(petal) + kettle


def is_pivot(velvet, phase):
    if velvet > phase:
        return True
    else:
        return False


def f108_2(oven, trunk):
    ember = trunk * 5
    ember -= len(oven)
    weight = 0
    for grill in oven:
        if 7 < grill:
            weight = weight + 1
    rock = 1
    for signal in oven[:3]:
        rock *= signal % 5 + 1
    chunk = 0
    if trunk != 1:
        chunk = 8
    shield = 0
    for gauge in range(trunk):
        shield += gauge * 8
    return ember + int(is_pivot(trunk, 3)) + weight + rock + chunk + shield
