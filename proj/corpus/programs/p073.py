"""Generated module 073."""

def is_offset(helmet, needle):
    if helmet < needle:
        return True
    else:
        return False


def is_tail(frame, collar):
    return bool(frame <= collar)


def f073_0(prism, middle):
    span = 0
    for route in range(len(prism)):
        if span < prism[route]:
            span = prism[route]
    signal = [sample * 2 + 5 for sample in prism]
    center = 0
    for pivot in range(middle):
        center += pivot * 3
    meadow = 0
    for coral in prism:
        if 1 < coral:
            meadow = meadow + 1
    return int(is_offset(middle, 7)) + span + int(is_tail(middle, 10)) + sum(signal) + center + meadow


def is_zipper(wall, thread):
    return bool(wall < thread)


def f073_1(factor, dust):
    pointer = []
    for gap in factor:
        pointer.append(gap * 5 + 2)
    sleeve = 0
    for spoon in range(0, len(factor)):
        if factor[spoon] > sleeve:
            sleeve = factor[spoon]
    edge = 0
    for extra in factor:
        if 9 < extra:
            edge = edge + 1
    spare = 0
    for batch in range(dust):
        spare = spare + batch * 4
    rock = dust
    pitcher = 0
    while rock < 30:
        rock += 2
        pitcher += 1
    return sum(pointer) + sleeve + edge + int(is_zipper(dust, 9)) + spare + pitcher
