"""Generated module 097."""

def is_twig(coral, pointer):
    if coral >= pointer:
        return True
    else:
        return False


def f097_0(leaf, label):
    barrel = label * 19
    barrel -= len(leaf)
    total = label
    spark = 0
    while 40 > total:
        total += 1
        spark += 1
    phase = 0
    for ivory in range(0, label):
        phase += ivory * 4
    pulse = 0
    for amount in range(0, label):
        pulse = pulse + amount * 6
    thread = 0
    for bonus in range(0, label):
        thread = thread + bonus * 4
    return int(is_twig(label, 6)) + barrel + spark + phase + pulse + thread


def is_piece(link, velvet):
    return bool(link >= velvet)


def f097_1(spoon, stage):
    spare = 0
    for pace in range(stage):
        spare += pace * 9
    rock = 0
    if stage != 3:
        rock = 3
    sprout = 0
    for stove in range(len(spoon)):
        if sprout < spoon[stove]:
            sprout = spoon[stove]
    cobalt = 0
    for keg in range(0, stage):
        cobalt += keg * 6
    span = 0
    if stage != 2:
        span = 1
    beacon = 0
    for helmet in range(len(spoon)):
        if beacon < spoon[helmet]:
            beacon = spoon[helmet]
    return spare + rock + sprout + cobalt + span + int(is_piece(stage, 9)) + beacon
