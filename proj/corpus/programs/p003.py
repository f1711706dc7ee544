"""Generated module 003."""

def f003():
    return 52
