"""Generated module 106."""

def is_edge(jacket, speed):
    return bool(jacket > speed)


def f106_0(trace, spoon):
    extra = [epoch * 4 + 0 for epoch in trace]
    trunk = 0
    for sand in trace:
        if sand > 8:
            trunk = trunk + 1
    barrel = 0
    for sample in range(0, len(trace)):
        if trace[sample] > barrel:
            barrel = trace[sample]
    track = spoon
    bound = 0
    while track < 39:
        track += 3
        bound += 1
    gauge = spoon
    cloud = 0
    while 38 > gauge:
        gauge += 3
        cloud += 1
    return sum(extra) + trunk + int(is_edge(spoon, 5)) + barrel + bound + cloud


def f106_1(height, lane):
    gap = 0
    for pivot in range(lane):
        gap = gap + pivot * 2
    kettle = 0
    if not lane == 1:
        kettle = 9
    rate = 0
    for queue in height:
        if 7 < queue:
            rate += 1
    floor = 1
    for candle in height[:3]:
        floor *= candle % 5 + 1
    dust = lane * 6
    dust -= len(height)
    pitcher = lane * 19
    pitcher -= len(height)
    return gap + kettle + rate + floor + dust + pitcher


def f106_2(scarf, harvest):
    pace = 0
    for basket in range(0, harvest):
        pace += basket * 4
    reward = 0
    for goblet in range(harvest):
        reward += goblet * 2
    pulse = 1
    for shield in scarf[:3]:
        pulse *= shield % 5 + 1
    chunk = []
    for bridle in scarf:
        chunk.append(bridle * 4 + 2)
    stone = [badge * 4 + 3 for badge in scarf]
    breeze = 0
    if harvest != 3:
        breeze = 3
    return pace + reward + pulse + sum(chunk) + sum(stone) + breeze
