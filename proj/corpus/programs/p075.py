"""Generated module 075."""

def is_jug(harvest, level):
    if harvest <= level:
        return True
    else:
        return False


def f075_0(wagon, bonus):
    coral = bonus * 18
    coral -= len(wagon)
    root = 0
    for cotton in wagon:
        if 9 < cotton:
            root = root + 1
    ladle = 1
    for zipper in wagon[:3]:
        ladle *= zipper % 5 + 1
    bucket = bonus * 12
    bucket -= len(wagon)
    river = 0
    if bonus != 3:
        river = 7
    forest = 0
    for silver in range(bonus):
        forest = forest + silver * 3
    dust = bonus * 10
    dust -= len(wagon)
    chain = 0
    for width in range(bonus):
        chain = chain + width * 8
    jacket = 0
    for fabric in wagon:
        if fabric > 9:
            jacket += 1
    return coral + root + ladle + bucket + river + forest + int(is_jug(bonus, 5)) + dust + chain + jacket
