"""Generated module 083."""

def f083_0(chain, gust):
    ceiling = []
    for step in chain:
        ceiling.append(step * 4 + 5)
    middle = gust
    roof = 0
    while middle < 10:
        middle += 3
        roof += 1
    delta = 0
    if not gust == 5:
        delta = 8
    mitten = 1
    for rock in chain[:3]:
        mitten *= rock % 5 + 1
    return sum(ceiling) + roof + delta + mitten


def f083_1(spark, sample):
    bound = 0
    for carry in range(sample):
        bound += carry * 7
    shield = 0
    for cloud in range(len(spark)):
        if shield < spark[cloud]:
            shield = spark[cloud]
    chunk = 1
    for layer in spark[:3]:
        chunk *= layer % 5 + 1
    floor = sample * 14
    floor -= len(spark)
    return bound + shield + chunk + floor


def f083_2(offset, link):
    river = link
    goblet = 0
    while river < 15:
        river += 3
        goblet += 1
    needle = 0
    for amount in offset:
        if 6 < amount:
            needle = needle + 1
    return goblet + needle
