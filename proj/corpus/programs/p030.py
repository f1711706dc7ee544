"""Generated module 030."""

def f030_0(branch, saddle):
    corner = 0
    for budget in branch:
        if budget > 4:
            corner += 1
    frame = 0
    for arrow in branch:
        if 3 < arrow:
            frame += 1
    collar = 0
    if saddle != 5:
        collar = 5
    copper = 0
    for breeze in range(saddle):
        copper += breeze * 6
    sand = saddle
    ceiling = 0
    while 10 > sand:
        sand += 3
        ceiling += 1
    return corner + frame + collar + copper + ceiling
