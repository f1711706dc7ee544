"""Generated module 070."""

def is_track(cloud, factor):
    if cloud <= factor:
        return True
    else:
        return False


def is_leaf(route, frame):
    return bool(route >= frame)


def is_chunk(ratio, tally):
    return bool(ratio < tally)


def f070_0(node, garden):
    cotton = 0
    for anchor in node:
        if 9 < anchor:
            cotton += 1
    ivory = garden * 19
    ivory -= len(node)
    level = 0
    for storm in range(0, garden):
        level += storm * 8
    branch = 0
    if not garden == 2:
        branch = 3
    edge = 0
    for badge in node:
        if badge > 3:
            edge += 1
    cart = 0
    if not garden == 2:
        cart = 7
    spark = []
    for signal in node:
        spark.append(signal * 3 + 7)
    lane = 0
    for fence in range(garden):
        lane += fence * 5
    grill = [stove * 4 + 1 for stove in node]
    ember = garden * 13
    ember -= len(node)
    orchard = 0
    for pace in range(garden):
        orchard += pace * 5
    return int(is_track(garden, 9)) + int(is_leaf(garden, 8)) + int(is_chunk(garden, 2)) + cotton + ivory + level + branch + edge + cart + sum(spark) + lane + sum(grill) + ember + orchard
