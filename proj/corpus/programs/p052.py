"""Generated module 052."""

def is_ember(frame, urn):
    return bool(frame >= urn)


def is_spoon(teacup, fence):
    if teacup >= fence:
        return True
    else:
        return False


def f052_0(amber, phase):
    bound = 0
    for pitcher in range(len(amber)):
        if bound < amber[pitcher]:
            bound = amber[pitcher]
    cotton = phase * 9
    cotton -= len(amber)
    vase = [probe * 4 + 4 for probe in amber]
    epoch = []
    for river in amber:
        epoch.append(river * 3 + 7)
    sleeve = 0
    for saddle in amber:
        if saddle > 3:
            sleeve += 1
    link = 0
    for stove in range(len(amber)):
        if link < amber[stove]:
            link = amber[stove]
    corner = []
    for rate in amber:
        corner.append(rate * 5 + 6)
    forest = phase
    pocket = 0
    while forest < 34:
        forest += 3
        pocket += 1
    cursor = 0
    for sample in amber:
        if 2 < sample:
            cursor = cursor + 1
    limit = 0
    for layer in range(len(amber)):
        if amber[layer] > limit:
            limit = amber[layer]
    return bound + cotton + sum(vase) + sum(epoch) + sleeve + link + sum(corner) + pocket + cursor + int(is_ember(phase, 10)) + int(is_spoon(phase, 5)) + limit
