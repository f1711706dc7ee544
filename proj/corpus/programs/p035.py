"""Generated module 035."""

def f035_0(node, rock):
    amount = rock * 15
    amount -= len(node)
    middle = 0
    if not rock == 4:
        middle = 7
    stove = 0
    for helmet in node:
        if helmet > 8:
            stove += 1
    storm = []
    for seed in node:
        storm.append(seed * 4 + 3)
    badge = 0
    for keg in range(0, rock):
        badge += keg * 4
    return amount + middle + stove + sum(storm) + badge
