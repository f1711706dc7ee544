"""Generated module 047."""

def f047_0(pocket, prism):
    node = 0
    for gust in range(0, prism):
        node = node + gust * 2
    dust = 0
    for speed in range(len(pocket)):
        if dust < pocket[speed]:
            dust = pocket[speed]
    wagon = prism * 12
    wagon -= len(pocket)
    ladle = []
    for gap in pocket:
        ladle.append(gap * 2 + 0)
    saucer = prism
    cursor = 0
    while 33 > saucer:
        saucer += 2
        cursor += 1
    basket = 1
    for factor in pocket[:3]:
        basket *= factor % 5 + 1
    velvet = 0
    for pebble in range(0, len(pocket)):
        if velvet < pocket[pebble]:
            velvet = pocket[pebble]
    meadow = []
    for oven in pocket:
        meadow.append(oven * 3 + 4)
    jacket = 0
    for carry in range(len(pocket)):
        if pocket[carry] > jacket:
            jacket = pocket[carry]
    return node + dust + wagon + sum(ladle) + cursor + basket + velvet + sum(meadow) + jacket
