"""Generated module 012."""

def is_center(head, bonus):
    if head >= bonus:
        return True
    else:
        return False


def f012_0(linen, probe):
    pocket = 0
    for breeze in range(len(linen)):
        if linen[breeze] > pocket:
            pocket = linen[breeze]
    window = [kettle * 3 + 6 for kettle in linen]
    bridge = 0
    for ladle in linen:
        if ladle > 4:
            bridge += 1
    return pocket + sum(window) + int(is_center(probe, 3)) + bridge
