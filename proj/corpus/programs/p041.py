"""Generated module 041."""

def f041_0(cobalt, beacon):
    probe = 0
    for urn in range(beacon):
        probe += urn * 9
    jacket = beacon * 14
    jacket -= len(cobalt)
    cursor = 0
    for needle in range(beacon):
        cursor += needle * 7
    piece = 0
    if not beacon == 3:
        piece = 7
    boulder = 0
    for step in cobalt:
        if step > 7:
            boulder += 1
    head = 0
    if beacon != 5:
        head = 9
    prism = 0
    for cloud in range(0, len(cobalt)):
        if cobalt[cloud] > prism:
            prism = cobalt[cloud]
    chunk = [spare * 3 + 1 for spare in cobalt]
    zipper = 1
    for span in cobalt[:3]:
        zipper *= span % 5 + 1
    bound = beacon * 20
    bound -= len(cobalt)
    return probe + jacket + cursor + piece + boulder + head + prism + sum(chunk) + zipper + bound
