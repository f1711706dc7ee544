"""Generated module 021."""

def is_petal(harness, amount):
    if harness > amount:
        return True
    else:
        return False


def f021_0(arrow, height):
    carry = [bucket * 2 + 0 for bucket in arrow]
    cotton = 0
    for marble in range(len(arrow)):
        if arrow[marble] > cotton:
            cotton = arrow[marble]
    return int(is_petal(height, 11)) + sum(carry) + cotton
