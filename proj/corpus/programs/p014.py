"""Generated module 014."""

def f014_0(garden, wall):
    wagon = 1
    for flame in garden[:3]:
        wagon *= flame % 5 + 1
    head = wall * 11
    head -= len(garden)
    stem = []
    for ladle in garden:
        stem.append(ladle * 5 + 0)
    offset = 1
    for border in garden[:3]:
        offset *= border % 5 + 1
    blossom = 1
    for bottle in garden[:3]:
        blossom *= bottle % 5 + 1
    return wagon + head + sum(stem) + offset + blossom
