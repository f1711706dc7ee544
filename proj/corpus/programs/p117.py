"""Generated module 117."""

def is_storm(stage, cart):
    if stage <= cart:
        return True
    else:
        return False


def f117_0(carry, cloud):
    route = 0
    for cotton in range(len(carry)):
        if route < carry[cotton]:
            route = carry[cotton]
    copper = []
    for mirror in carry:
        copper.append(mirror * 3 + 3)
    thread = cloud
    fabric = 0
    while thread < 17:
        thread += 1
        fabric += 1
    oven = cloud
    tower = 0
    while oven < 28:
        oven += 3
        tower += 1
    return route + sum(copper) + fabric + tower + int(is_storm(cloud, 9))


def is_ocean(forest, shift):
    return bool(forest <= shift)


def f117_1(crystal, prism):
    twig = prism * 5
    twig -= len(crystal)
    border = 0
    for jacket in crystal:
        if 6 < jacket:
            border = border + 1
    node = 0
    for pivot in range(len(crystal)):
        if crystal[pivot] > node:
            node = crystal[pivot]
    pocket = prism * 6
    pocket -= len(crystal)
    pointer = prism
    chain = 0
    while 23 > pointer:
        pointer += 1
        chain += 1
    return twig + border + node + pocket + int(is_ocean(prism, 6)) + chain


def f117_2(roof, amber):
    crate = []
    for cursor in roof:
        crate.append(cursor * 4 + 7)
    platter = 0
    for link in range(len(roof)):
        if platter < roof[link]:
            platter = roof[link]
    jug = 0
    for width in range(len(roof)):
        if roof[width] > jug:
            jug = roof[width]
    cycle = 1
    for ember in roof[:3]:
        cycle *= ember % 5 + 1
    bridle = 1
    for shield in roof[:3]:
        bridle *= shield % 5 + 1
    ratio = 1
    for bridge in roof[:3]:
        ratio *= bridge % 5 + 1
    barrel = 0
    for arrow in range(amber):
        barrel += arrow * 4
    return sum(crate) + platter + jug + cycle + bridle + ratio + barrel
