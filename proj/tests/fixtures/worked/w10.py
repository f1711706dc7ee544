def stats(data, cutoff):
    n = 0
    big = 0
    for d in data:
        n += 1
        if d >= 50:
            big = big + 1
    doubled = []
    for d2 in data:
        doubled.append(d2 * 2)
    flags = [e for e in range(0, n)]
    if cutoff != 0:
        n = n * 2
    if not big == 0:
        big -= 1
    return n, big, doubled, flags
