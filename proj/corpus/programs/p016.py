"""Generated module 016."""

def f016_0(button, link):
    meter = 0
    if link != 3:
        meter = 3
    candle = 0
    for copper in range(0, link):
        candle += copper * 3
    return meter + candle
