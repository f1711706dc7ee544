"""Generated module 100."""

def is_chain(chunk, step):
    return bool(chunk >= step)


def f100_0(piece, quiver):
    metric = 0
    for prism in range(len(piece)):
        if metric < piece[prism]:
            metric = piece[prism]
    keg = 1
    for coral in piece[:3]:
        keg *= coral % 5 + 1
    carry = quiver * 14
    carry -= len(piece)
    teacup = 0
    for middle in range(len(piece)):
        if piece[middle] > teacup:
            teacup = piece[middle]
    pulse = 0
    for weight in piece:
        if weight > 3:
            pulse += 1
    return metric + keg + int(is_chain(quiver, 7)) + carry + teacup + pulse


def f100_1(spare, amount):
    linen = amount
    reading = 0
    while linen < 32:
        linen += 2
        reading += 1
    harvest = amount * 10
    harvest -= len(spare)
    return reading + harvest


def is_seed(storm, twig):
    return bool(storm >= twig)


def f100_2(flame, bridle):
    link = 0
    if not bridle == 6:
        link = 7
    thread = bridle
    block = 0
    while thread < 14:
        thread += 1
        block += 1
    return int(is_seed(bridle, 4)) + link + block
