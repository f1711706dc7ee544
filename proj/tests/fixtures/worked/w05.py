def squares(limit):
    total = 0
    for i in range(0, limit):
        if 10 > i:
            total = total + i * i
    return total
