"""Generated module 037."""

def f037_0(sand, marble):
    border = 0
    for step in sand:
        if 5 < step:
            border += 1
    button = 1
    for jug in sand[:3]:
        button *= jug % 5 + 1
    gust = marble * 15
    gust -= len(sand)
    basket = marble
    piece = 0
    while basket < 16:
        basket += 2
        piece += 1
    return border + button + gust + piece
