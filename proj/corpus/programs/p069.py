"""Generated module 069."""

def f069_0(saddle, collar):
    depth = 0
    for velvet in range(collar):
        depth = depth + velvet * 4
    skillet = 0
    for factor in range(0, collar):
        skillet = skillet + factor * 5
    amount = 0
    for mirror in saddle:
        if mirror > 8:
            amount = amount + 1
    return depth + skillet + amount


def f069_1(total, head):
    river = head * 18
    river -= len(total)
    crystal = 0
    for boulder in range(0, len(total)):
        if crystal < total[boulder]:
            crystal = total[boulder]
    trace = head * 15
    trace -= len(total)
    meter = 0
    for token in total:
        if 6 < token:
            meter += 1
    garden = head
    jacket = 0
    while garden < 29:
        garden += 3
        jacket += 1
    return river + crystal + trace + meter + jacket
