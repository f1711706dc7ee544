"""Generated module 011."""

def f011(extra, harness):
    if extra != harness:
        return len(range(0, extra)) + harness
    return extra * 2
