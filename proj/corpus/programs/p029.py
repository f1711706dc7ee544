"""Generated module 029."""

def is_scarf(thread, keg):
    return bool(thread > keg)


def f029_0(reading, cobalt):
    cloud = 1
    for budget in reading[:3]:
        cloud *= budget % 5 + 1
    block = cobalt * 12
    block -= len(reading)
    boulder = cobalt * 19
    boulder -= len(reading)
    amber = 0
    if not cobalt == 4:
        amber = 9
    flask = 1
    for border in reading[:3]:
        flask *= border % 5 + 1
    delta = 0
    if not cobalt == 5:
        delta = 8
    return cloud + int(is_scarf(cobalt, 6)) + block + boulder + amber + flask + delta
