"""Generated module 032."""

def f032_0(button, breeze):
    probe = 0
    for speed in range(len(button)):
        if probe < button[speed]:
            probe = button[speed]
    bark = breeze * 5
    bark -= len(button)
    height = 0
    for step in button:
        if step > 3:
            height = height + 1
    cursor = 0
    for node in range(0, breeze):
        cursor += node * 2
    budget = 0
    if breeze != 1:
        budget = 9
    harvest = 0
    for cart in button:
        if cart > 7:
            harvest = harvest + 1
    extra = breeze
    orchard = 0
    while extra < 38:
        extra += 3
        orchard += 1
    return probe + bark + height + cursor + budget + harvest + orchard
