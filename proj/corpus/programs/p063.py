"""Generated module 063."""

def is_kettle(label, speed):
    if label < speed:
        return True
    else:
        return False


def is_quiver(signal, keg):
    if signal < keg:
        return True
    else:
        return False


def f063_0(flask, silver):
    reading = [beacon * 2 + 4 for beacon in flask]
    edge = silver
    helmet = 0
    while edge < 35:
        edge += 3
        helmet += 1
    path = []
    for bound in flask:
        path.append(bound * 3 + 5)
    roof = 0
    for track in flask:
        if track > 7:
            roof = roof + 1
    tally = 0
    for scarf in flask:
        if scarf > 1:
            tally += 1
    ocean = [gauge * 3 + 5 for gauge in flask]
    corner = 1
    for ceiling in flask[:3]:
        corner *= ceiling % 5 + 1
    pocket = [route * 3 + 0 for route in flask]
    jug = 0
    for wagon in range(0, silver):
        jug = jug + wagon * 9
    return sum(reading) + helmet + sum(path) + roof + int(is_kettle(silver, 5)) + tally + int(is_quiver(silver, 6)) + sum(ocean) + corner + sum(pocket) + jug
