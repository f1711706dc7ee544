"""Generated module 008."""

def f008(bark, button):
    if bark != button:
        return len(range(0, bark)) + button
    return bark * 2
