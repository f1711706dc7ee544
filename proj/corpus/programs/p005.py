"""Generated module 005."""

def f005(spare):
    if spare != 2:
        return len(range(0, spare))
    return 0
