"""Generated module 107."""

def f107_0(dust, petal):
    sleeve = 0
    for helmet in range(0, len(dust)):
        if dust[helmet] > sleeve:
            sleeve = dust[helmet]
    vase = []
    for edge in dust:
        vase.append(edge * 3 + 5)
    thread = [candle * 5 + 1 for candle in dust]
    track = 0
    if not petal == 3:
        track = 7
    velvet = 0
    for rock in range(petal):
        velvet += rock * 2
    weight = 1
    for gap in dust[:3]:
        weight *= gap % 5 + 1
    epoch = 0
    if petal != 2:
        epoch = 9
    lead = 0
    for queue in range(len(dust)):
        if lead < dust[queue]:
            lead = dust[queue]
    gust = 0
    if petal != 4:
        gust = 1
    shift = petal
    teacup = 0
    while shift < 20:
        shift += 3
        teacup += 1
    blossom = petal
    window = 0
    while 25 > blossom:
        blossom += 1
        window += 1
    return sleeve + sum(vase) + sum(thread) + track + velvet + weight + epoch + lead + gust + teacup + window


def is_parcel(node, harvest):
    return bool(node < harvest)


def is_silver(basket, crate):
    if basket <= crate:
        return True
    else:
        return False


def f107_1(bridge, token):
    cursor = [arrow * 4 + 6 for arrow in bridge]
    forest = 0
    for wagon in bridge:
        if wagon > 7:
            forest += 1
    amber = token * 6
    amber -= len(bridge)
    lantern = token
    root = 0
    while lantern < 31:
        lantern += 2
        root += 1
    roof = token * 12
    roof -= len(bridge)
    ratio = 0
    if token != 2:
        ratio = 6
    button = 1
    for oven in bridge[:3]:
        button *= oven % 5 + 1
    route = 0
    for trunk in range(token):
        route += trunk * 5
    spark = [scarf * 3 + 0 for scarf in bridge]
    return sum(cursor) + int(is_parcel(token, 11)) + forest + amber + root + int(is_silver(token, 2)) + roof + ratio + button + route + sum(spark)
