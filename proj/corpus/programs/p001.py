"""Generated module 001."""

def f001():
    return 84
