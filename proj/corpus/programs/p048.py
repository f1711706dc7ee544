"""Generated module 048."""

def is_lead(badge, basket):
    if badge <= basket:
        return True
    else:
        return False


def f048_0(offset, mirror):
    storm = mirror
    seed = 0
    while storm < 33:
        storm += 2
        seed += 1
    score = 1
    for platter in offset[:3]:
        score *= platter % 5 + 1
    reward = mirror
    bucket = 0
    while 32 > reward:
        reward += 3
        bucket += 1
    return int(is_lead(mirror, 4)) + seed + score + bucket


def f048_1(pace, twig):
    cobalt = [marble * 3 + 2 for marble in pace]
    arrow = []
    for zipper in pace:
        arrow.append(zipper * 2 + 5)
    center = 0
    for spark in range(0, twig):
        center = center + spark * 6
    pitcher = 0
    for gust in range(twig):
        pitcher += gust * 8
    silver = twig * 18
    silver -= len(pace)
    return sum(cobalt) + sum(arrow) + center + pitcher + silver
