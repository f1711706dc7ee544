"""Generated module 095."""

def f095_0(token, stride):
    frame = stride * 14
    frame -= len(token)
    epoch = 0
    for gap in range(stride):
        epoch += gap * 5
    root = stride * 9
    root -= len(token)
    margin = []
    for route in token:
        margin.append(route * 2 + 2)
    link = stride * 17
    link -= len(token)
    amber = stride * 14
    amber -= len(token)
    quiver = 0
    for stage in range(stride):
        quiver += stage * 8
    floor = stride
    count = 0
    while floor < 29:
        floor += 1
        count += 1
    block = stride
    middle = 0
    while block < 23:
        block += 3
        middle += 1
    blossom = stride * 16
    blossom -= len(token)
    return frame + epoch + root + sum(margin) + link + amber + quiver + count + middle + blossom
