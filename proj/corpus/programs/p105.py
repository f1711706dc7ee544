"""Generated module 105."""

def is_saucer(cotton, thread):
    if cotton < thread:
        return True
    else:
        return False


def is_seed(epoch, spoon):
    if epoch < spoon:
        return True
    else:
        return False


def is_bridle(teacup, trunk):
    if teacup < trunk:
        return True
    else:
        return False


def f105_0(pivot, spare):
    river = 1
    for shield in pivot[:3]:
        river *= shield % 5 + 1
    spark = 0
    for level in range(0, len(pivot)):
        if pivot[level] > spark:
            spark = pivot[level]
    cart = spare * 11
    cart -= len(pivot)
    chunk = 1
    for flame in pivot[:3]:
        chunk *= flame % 5 + 1
    signal = 0
    for marble in range(0, spare):
        signal = signal + marble * 8
    saddle = 0
    if spare != 5:
        saddle = 3
    wagon = 1
    for jug in pivot[:3]:
        wagon *= jug % 5 + 1
    border = spare
    marker = 0
    while border < 14:
        border += 1
        marker += 1
    meadow = 1
    for flask in pivot[:3]:
        meadow *= flask % 5 + 1
    needle = spare
    link = 0
    while 24 > needle:
        needle += 2
        link += 1
    pulse = [margin * 4 + 0 for margin in pivot]
    stem = 0
    for path in range(spare):
        stem += path * 7
    ceiling = spare * 17
    ceiling -= len(pivot)
    stride = 0
    for silver in pivot:
        if silver > 3:
            stride += 1
    return river + spark + cart + chunk + signal + int(is_saucer(spare, 12)) + saddle + wagon + marker + meadow + link + sum(pulse) + stem + ceiling + stride + int(is_seed(spare, 6)) + int(is_bridle(spare, 4))
