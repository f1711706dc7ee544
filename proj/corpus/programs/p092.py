"""Generated module 092."""

def f092_0(pointer, bridge):
    count = [route * 4 + 1 for route in pointer]
    ladle = 0
    for floor in range(0, len(pointer)):
        if ladle < pointer[floor]:
            ladle = pointer[floor]
    twig = bridge * 17
    twig -= len(pointer)
    delta = 0
    if bridge != 4:
        delta = 9
    coral = 0
    for petal in range(len(pointer)):
        if coral < pointer[petal]:
            coral = pointer[petal]
    return sum(count) + ladle + twig + delta + coral


def f092_1(span, seed):
    grill = 0
    if seed != 6:
        grill = 7
    river = seed
    oven = 0
    while river < 16:
        river += 3
        oven += 1
    arrow = 1
    for root in span[:3]:
        arrow *= root % 5 + 1
    return grill + oven + arrow


def f092_2(button, width):
    edge = 1
    for signal in button[:3]:
        edge *= signal % 5 + 1
    token = 1
    for zipper in button[:3]:
        token *= zipper % 5 + 1
    boulder = width * 15
    boulder -= len(button)
    score = 1
    for helmet in button[:3]:
        score *= helmet % 5 + 1
    tower = []
    for vase in button:
        tower.append(vase * 2 + 0)
    return edge + token + boulder + score + sum(tower)
