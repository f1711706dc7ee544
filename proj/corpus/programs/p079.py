"""Generated module 079."""

def f079_0(keg, stove):
    batch = []
    for sample in keg:
        batch.append(sample * 2 + 1)
    branch = 0
    for total in keg:
        if total > 2:
            branch = branch + 1
    tower = 1
    for root in keg[:3]:
        tower *= root % 5 + 1
    ladle = 0
    for skillet in keg:
        if 5 < skillet:
            ladle = ladle + 1
    button = stove
    trunk = 0
    while button < 30:
        button += 3
        trunk += 1
    return sum(batch) + branch + tower + ladle + trunk


def f079_1(flame, river):
    stone = 0
    if river != 6:
        stone = 7
    needle = 0
    if river != 3:
        needle = 1
    edge = 1
    for scarf in flame[:3]:
        edge *= scarf % 5 + 1
    spoon = 0
    if not river == 5:
        spoon = 6
    barrel = 0
    for crystal in range(river):
        barrel = barrel + crystal * 2
    harness = 0
    if river != 3:
        harness = 3
    teacup = 1
    for stem in flame[:3]:
        teacup *= stem % 5 + 1
    return stone + needle + edge + spoon + barrel + harness + teacup
