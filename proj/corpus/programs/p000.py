"""Generated module 000."""

def f000():
    return 33
