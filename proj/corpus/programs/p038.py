"""Generated module 038."""

def f038_0(cobalt, barrel):
    span = 0
    for speed in cobalt:
        if 1 < speed:
            span = span + 1
    tail = barrel
    skillet = 0
    while tail < 31:
        tail += 1
        skillet += 1
    ceiling = 0
    for badge in cobalt:
        if badge > 1:
            ceiling += 1
    saucer = 1
    for track in cobalt[:3]:
        saucer *= track % 5 + 1
    count = 0
    for gust in cobalt:
        if gust > 5:
            count += 1
    return span + skillet + ceiling + saucer + count
