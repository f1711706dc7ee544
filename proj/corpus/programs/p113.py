"""Generated module 113."""

def is_pitcher(cotton, crystal):
    if cotton > crystal:
        return True
    else:
        return False


def f113_0(link, tail):
    badge = 0
    for amount in link:
        if 1 < amount:
            badge += 1
    prism = 0
    for spark in range(0, len(link)):
        if link[spark] > prism:
            prism = link[spark]
    copper = 1
    for platter in link[:3]:
        copper *= platter % 5 + 1
    root = 1
    for ivory in link[:3]:
        root *= ivory % 5 + 1
    bridle = 0
    if not tail == 5:
        bridle = 4
    harvest = 0
    if tail != 4:
        harvest = 2
    bonus = tail * 19
    bonus -= len(link)
    silver = tail
    branch = 0
    while 11 > silver:
        silver += 1
        branch += 1
    chunk = 0
    for score in link:
        if score > 0:
            chunk = chunk + 1
    return badge + prism + copper + root + bridle + harvest + bonus + int(is_pitcher(tail, 5)) + branch + chunk


def f113_1(label, mirror):
    metric = []
    for corner in label:
        metric.append(corner * 2 + 0)
    floor = 0
    for offset in range(mirror):
        floor += offset * 6
    meter = 1
    for edge in label[:3]:
        meter *= edge % 5 + 1
    velvet = mirror * 19
    velvet -= len(label)
    pocket = 0
    for piece in range(mirror):
        pocket = pocket + piece * 4
    pace = []
    for garden in label:
        pace.append(garden * 5 + 6)
    route = 0
    if mirror != 2:
        route = 6
    block = mirror * 8
    block -= len(label)
    keg = []
    for leaf in label:
        keg.append(leaf * 5 + 3)
    basket = mirror * 9
    basket -= len(label)
    return sum(metric) + floor + meter + velvet + pocket + sum(pace) + route + block + sum(keg) + basket
