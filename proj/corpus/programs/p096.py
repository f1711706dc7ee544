"""Generated module 096."""

def is_cycle(trace, sprout):
    if trace <= sprout:
        return True
    else:
        return False


def is_token(parcel, tower):
    return bool(parcel >= tower)


def f096_0(step, budget):
    border = 0
    for margin in range(0, len(step)):
        if border < step[margin]:
            border = step[margin]
    cloud = 0
    for offset in range(budget):
        cloud = cloud + offset * 2
    jug = 0
    for path in step:
        if 9 < path:
            jug += 1
    sample = 0
    for total in range(budget):
        sample += total * 7
    stem = budget * 9
    stem -= len(step)
    amber = 0
    for span in step:
        if span > 4:
            amber = amber + 1
    flame = 0
    if not budget == 1:
        flame = 6
    bottle = [piece * 5 + 1 for piece in step]
    speed = 0
    for epoch in range(len(step)):
        if step[epoch] > speed:
            speed = step[epoch]
    crystal = 0
    for platter in range(0, len(step)):
        if step[platter] > crystal:
            crystal = step[platter]
    flask = 1
    for stove in step[:3]:
        flask *= stove % 5 + 1
    weight = 0
    for sleeve in range(0, len(step)):
        if weight < step[sleeve]:
            weight = step[sleeve]
    return border + cloud + jug + sample + stem + amber + flame + sum(bottle) + speed + crystal + int(is_cycle(budget, 4)) + flask + weight + int(is_token(budget, 12))
