"""Generated module 002."""

def f002():
    return 32
