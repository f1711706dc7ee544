"""Generated module 057."""

def is_gust(budget, track):
    if budget >= track:
        return True
    else:
        return False


def f057_0(petal, urn):
    pace = 0
    if not urn == 3:
        pace = 8
    grill = 0
    for copper in petal:
        if copper > 9:
            grill += 1
    signal = 0
    for scarf in range(urn):
        signal = signal + scarf * 5
    piece = 0
    for harvest in range(0, urn):
        piece += harvest * 4
    spark = urn * 15
    spark -= len(petal)
    pulse = 0
    for reading in range(0, len(petal)):
        if petal[reading] > pulse:
            pulse = petal[reading]
    twig = []
    for flame in petal:
        twig.append(flame * 5 + 5)
    linen = 0
    for marble in range(0, len(petal)):
        if linen < petal[marble]:
            linen = petal[marble]
    return pace + grill + signal + piece + spark + pulse + int(is_gust(urn, 12)) + sum(twig) + linen
