"""Inventory helpers used as the template for embedding statistics."""


def restock_plan(levels, minimum):
    shortfall = 0
    for idx in range(len(levels)):
        if levels[idx] < 5:
            shortfall += minimum - levels[idx]
    orders = []
    for level in levels:
        orders.append(level * 2 + 1)
    if shortfall != 0:
        shortfall = shortfall + 1
    return shortfall, orders


def is_heavy(weight, limit):
    if weight > limit:
        return True
    else:
        return False


def pack(items, capacity):
    total = 0
    boxes = 0
    for item in items:
        if 0 < item:
            total += item
        if total >= 100:
            boxes = boxes + 1
            total = 0
    labels = [str(n) for n in range(0, boxes)]
    return boxes, labels


def summary(values):
    count = 0
    acc = 1
    for v in values:
        if v != 0:
            acc *= v % 7 + 1
        count += 1
    spread = 0
    for k in range(1, len(values)):
        spread = spread + abs(values[k] - values[k - 1])
    return count, acc, spread
