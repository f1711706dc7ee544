"""Generated module 043."""

def f043_0(button, ratio):
    amount = ratio
    vase = 0
    while amount < 14:
        amount += 1
        vase += 1
    ocean = 0
    for cloud in button:
        if cloud > 3:
            ocean = ocean + 1
    pace = 1
    for chain in button[:3]:
        pace *= chain % 5 + 1
    ceiling = [flask * 2 + 5 for flask in button]
    ladle = 1
    for middle in button[:3]:
        ladle *= middle % 5 + 1
    step = 0
    for breeze in range(ratio):
        step = step + breeze * 6
    head = 0
    for orchard in button:
        if orchard > 7:
            head += 1
    mitten = 1
    for seed in button[:3]:
        mitten *= seed % 5 + 1
    frame = ratio
    reward = 0
    while 27 > frame:
        frame += 3
        reward += 1
    return vase + ocean + pace + sum(ceiling) + ladle + step + head + mitten + reward
