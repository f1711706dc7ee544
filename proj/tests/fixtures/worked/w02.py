def bump(x):
    x += 1
    out = []
    for item in range(x):
        out.append(item)
    return out
