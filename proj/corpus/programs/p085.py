"""Generated module 085."""

def is_block(cloud, petal):
    if cloud > petal:
        return True
    else:
        return False


def is_beacon(fence, count):
    if fence < count:
        return True
    else:
        return False


def f085_0(reward, velvet):
    middle = 0
    for center in range(velvet):
        middle = middle + center * 8
    flask = velvet
    bonus = 0
    while 12 > flask:
        flask += 3
        bonus += 1
    stock = 0
    if not velvet == 4:
        stock = 2
    anchor = 0
    for sample in range(len(reward)):
        if reward[sample] > anchor:
            anchor = reward[sample]
    marker = 0
    for score in reward:
        if 7 < score:
            marker += 1
    ladle = velvet
    ceiling = 0
    while 29 > ladle:
        ladle += 2
        ceiling += 1
    cobalt = 0
    for needle in reward:
        if 6 < needle:
            cobalt += 1
    pebble = 0
    for ember in range(0, len(reward)):
        if pebble < reward[ember]:
            pebble = reward[ember]
    gust = 0
    for linen in range(len(reward)):
        if gust < reward[linen]:
            gust = reward[linen]
    return int(is_block(velvet, 5)) + middle + bonus + int(is_beacon(velvet, 11)) + stock + anchor + marker + ceiling + cobalt + pebble + gust
