"""Generated module 067."""

def f067_0(ivory, border):
    bark = 1
    for oven in ivory[:3]:
        bark *= oven % 5 + 1
    ratio = 0
    for metric in ivory:
        if 0 < metric:
            ratio += 1
    span = 0
    for corner in range(0, border):
        span = span + corner * 9
    total = border * 6
    total -= len(ivory)
    trunk = 0
    for badge in range(0, border):
        trunk = trunk + badge * 3
    roof = 0
    if not border == 4:
        roof = 4
    sleeve = 0
    if border != 3:
        sleeve = 7
    orchard = border * 6
    orchard -= len(ivory)
    stove = 0
    for gap in range(0, len(ivory)):
        if stove < ivory[gap]:
            stove = ivory[gap]
    reward = 0
    for carry in range(len(ivory)):
        if reward < ivory[carry]:
            reward = ivory[carry]
    quiver = 0
    if border != 3:
        quiver = 9
    velvet = 0
    for scarf in range(0, border):
        velvet += scarf * 2
    return bark + ratio + span + total + trunk + roof + sleeve + orchard + stove + reward + quiver + velvet
