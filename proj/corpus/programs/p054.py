"""Generated module 054."""

def f054_0(river, spoon):
    garden = 1
    for goblet in river[:3]:
        garden *= goblet % 5 + 1
    block = spoon
    fence = 0
    while block < 25:
        block += 2
        fence += 1
    carry = 0
    for harness in range(0, len(river)):
        if carry < river[harness]:
            carry = river[harness]
    window = 0
    for grill in range(spoon):
        window = window + grill * 9
    frame = 0
    for amber in river:
        if 8 < amber:
            frame += 1
    return garden + fence + carry + window + frame


def f054_1(mirror, roof):
    tower = roof * 7
    tower -= len(mirror)
    token = [anchor * 5 + 7 for anchor in mirror]
    wagon = 0
    for basket in range(roof):
        wagon += basket * 9
    batch = 0
    if not roof == 2:
        batch = 7
    lead = 0
    for keg in mirror:
        if keg > 9:
            lead = lead + 1
    return tower + sum(token) + wagon + batch + lead
