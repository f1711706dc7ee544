#!/usr/bin/env python3
"""Generate the bundled corpus: small Python modules plus unit tests.

Each module is built from code blocks with known anchor yields so the corpus
covers every capacity case. Expected test values come from running the clean
module, so tests pass on the unwatermarked corpus by construction.

    python3 corpus/generate.py            # rewrites corpus/programs and corpus/tests
"""

import argparse
import keyword
import pathlib
import random
import builtins

WORDS = """
total count amount score weight delta offset width height depth level limit
bound margin ratio factor scale shift carry spare extra bonus reward budget
stock queue batch chunk piece block frame layer stage phase round cycle epoch
tally metric gauge meter probe sample reading signal pulse trace track path
route lane step stride pace speed rate span window range_ gap lead tail
head node edge link chain bucket basket crate parcel token label badge
marker pointer cursor anchor pivot center middle corner border fence wall
floor ceiling roof bridge tower river ocean forest meadow garden orchard
harvest seed sprout blossom petal stem root branch twig leaf bark trunk
pebble stone rock boulder sand dust cloud storm breeze gust flame spark
ember candle lantern beacon mirror prism crystal marble copper silver
cobalt amber coral ivory velvet linen cotton fabric thread needle button
zipper pocket sleeve collar jacket mitten scarf helmet shield arrow quiver
saddle bridle harness wagon cart barrel keg bottle flask goblet spoon ladle
kettle oven stove grill skillet platter saucer teacup pitcher jug vase urn
""".split()

RESERVED = set(dir(builtins)) | set(keyword.kwlist) | {"self", "cls"}
WORDS = [w for w in WORDS if w.isalpha() and w not in RESERVED]


class Names:
    def __init__(self, rng):
        self.pool = list(WORDS)
        rng.shuffle(self.pool)

    def take(self):
        return self.pool.pop()


class Body:
    """Statements of one function plus the int expressions it contributes."""

    def __init__(self):
        self.lines = []
        self.results = []
        self.helpers = []  # extra module-level functions (lists of lines)

    def add(self, *lines):
        self.lines.extend(lines)


# Each block writes lines at one indent level and registers an int result.
# The comment on each names the formal rules it exercises.


def blk_sum_range(b, rng, names, items, n):  # R1, R6
    acc, i = names.take(), names.take()
    k = rng.randint(2, 9)
    rng_call = f"range(0, {n})" if rng.random() < 0.4 else f"range({n})"
    update = f"{acc} = {acc} + {i} * {k}" if rng.random() < 0.4 else f"{acc} += {i} * {k}"
    b.add(f"{acc} = 0", f"for {i} in {rng_call}:", f"    {update}")
    b.results.append(acc)


def blk_map_list(b, rng, names, items, n):  # R2
    out, v = names.take(), names.take()
    k, c = rng.randint(2, 5), rng.randint(0, 7)
    if rng.random() < 0.4:
        b.add(f"{out} = [{v} * {k} + {c} for {v} in {items}]")
    else:
        b.add(f"{out} = []", f"for {v} in {items}:", f"    {out}.append({v} * {k} + {c})")
    b.results.append(f"sum({out})")


def blk_count_above(b, rng, names, items, n):  # R1, R5
    cnt, v = names.take(), names.take()
    k = rng.randint(0, 9)
    test = f"{v} > {k}" if rng.random() < 0.5 else f"{k} < {v}"
    update = f"{cnt} += 1" if rng.random() < 0.6 else f"{cnt} = {cnt} + 1"
    b.add(f"{cnt} = 0", f"for {v} in {items}:", f"    if {test}:", f"        {update}")
    b.results.append(cnt)


def blk_ne_flag(b, rng, names, items, n):  # R3
    flag = names.take()
    k = rng.randint(1, 6)
    test = f"{n} != {k}" if rng.random() < 0.6 else f"not {n} == {k}"
    b.add(f"{flag} = 0", f"if {test}:", f"    {flag} = {rng.randint(1, 9)}")
    b.results.append(flag)


def blk_bool_helper(b, rng, names, items, n):  # R4 in a helper function
    fn, a, c = names.take(), names.take(), names.take()
    op = rng.choice(["<", ">", "<=", ">="])
    if rng.random() < 0.6:
        body = [f"    if {a} {op} {c}:", "        return True", "    else:", "        return False"]
    else:
        body = [f"    return bool({a} {op} {c})"]
    b.helpers.append([f"def is_{fn}({a}, {c}):"] + body)
    b.results.append(f"int(is_{fn}({n}, {rng.randint(2, 12)}))")


def blk_while_step(b, rng, names, items, n):  # R5, R1, R1
    j, steps = names.take(), names.take()
    cap = rng.randint(10, 40)
    test = f"{j} < {cap}" if rng.random() < 0.5 else f"{cap} > {j}"
    b.add(f"{j} = {n}", f"{steps} = 0", f"while {test}:", f"    {j} += {rng.randint(1, 3)}", f"    {steps} += 1")
    b.results.append(steps)


def blk_max_search(b, rng, names, items, n):  # R6 (the comparison has no literal side)
    best, idx = names.take(), names.take()
    rng_call = f"range(0, len({items}))" if rng.random() < 0.4 else f"range(len({items}))"
    test = f"{items}[{idx}] > {best}" if rng.random() < 0.5 else f"{best} < {items}[{idx}]"
    b.add(f"{best} = 0", f"for {idx} in {rng_call}:", f"    if {test}:", f"        {best} = {items}[{idx}]")
    b.results.append(best)


def blk_rest(b, rng, names, items, n):  # R1 with subtraction
    rest = names.take()
    b.add(f"{rest} = {n} * {rng.randint(5, 20)}", f"{rest} -= len({items})")
    b.results.append(rest)


def blk_product(b, rng, names, items, n):  # R1 with multiplication
    prod, e = names.take(), names.take()
    b.add(f"{prod} = 1", f"for {e} in {items}[:3]:", f"    {prod} *= {e} % 5 + 1")
    b.results.append(prod)


BLOCKS = [
    (blk_sum_range, 2),
    (blk_map_list, 1),
    (blk_count_above, 2),
    (blk_ne_flag, 1),
    (blk_bool_helper, 1),
    (blk_while_step, 3),
    (blk_max_search, 1),
    (blk_rest, 1),
    (blk_product, 1),
]


def make_function(rng, names, fname, target_anchors):
    items, n = names.take(), names.take()
    b = Body()
    got = 0
    while got < target_anchors:
        fn, yield_ = rng.choice(BLOCKS)
        fn(b, rng, names, items, n)
        got += yield_
    lines = [f"def {fname}({items}, {n}):"]
    lines += ["    " + line for line in b.lines]
    lines.append("    return " + " + ".join(b.results))
    return b.helpers, lines, got


def make_tiny(rng, names, fname, kind):
    """Files near the bottom of the capacity ladder."""
    if kind == "empty":
        value = rng.randint(10, 99)
        return [f"def {fname}():", f"    return {value}"], "no_args"
    n = names.take()
    if kind == "one":
        # a single variable, a couple of formal anchors
        k = rng.randint(1, 5)
        return [
            f"def {fname}({n}):",
            f"    if {n} != {k}:",
            f"        return len(range(0, {n}))",
            "    return 0",
        ], "one_arg"
    if kind == "pair":
        # two variables: natural channel below Case1
        k = names.take()
        return [
            f"def {fname}({n}, {k}):",
            f"    if {n} != {k}:",
            f"        return len(range(0, {n})) + {k}",
            f"    return {n} * 2",
        ], "two_args"
    raise ValueError(kind)


def module_source(rng, idx, plan):
    names = Names(rng)
    header = [f'"""Generated module {idx:03d}."""', ""]
    chunks = []
    funcs = []
    if plan in ("empty", "one", "pair"):
        fname = f"f{idx:03d}"
        lines, style = make_tiny(rng, names, fname, plan)
        chunks.append(lines)
        funcs.append((fname, style))
    else:
        target = {"small": rng.randint(2, 5), "mid": rng.randint(6, 10), "large": rng.randint(12, 19),
                  "xl": rng.randint(22, 30)}[plan]
        parts = 1 if target < 12 else rng.randint(1, 3)
        per = [target // parts] * parts
        per[0] += target - sum(per)
        for p, t in enumerate(per):
            fname = f"f{idx:03d}_{p}"
            helpers, lines, _ = make_function(rng, names, fname, t)
            chunks.extend(helpers)
            chunks.append(lines)
            funcs.append((fname, "items_n"))
    body = []
    for c in chunks:
        body.extend(c)
        body.extend(["", ""])
    return "\n".join(header + body).rstrip() + "\n", funcs


def test_source(rng, idx, src, funcs):
    ns = {}
    exec(compile(src, f"p{idx:03d}.py", "exec"), ns)
    names = [f for f, _ in funcs]
    lines = [f"from p{idx:03d} import {', '.join(names)}", "", ""]
    for fname, style in funcs:
        for t in range(3):
            if style == "no_args":
                call = f"{fname}()"
            elif style == "one_arg":
                call = f"{fname}({rng.randint(0, 8)})"
            elif style == "two_args":
                call = f"{fname}({rng.randint(0, 8)}, {rng.randint(0, 8)})"
            else:
                items = [rng.randint(-5, 20) for _ in range(rng.randint(1, 7))]
                call = f"{fname}({items!r}, {rng.randint(0, 9)})"
            expected = eval(call, ns)
            lines += [f"def test_{fname}_{t}():", f"    assert {call} == {expected!r}", "", ""]
    return "\n".join(lines).rstrip() + "\n"


CONFTEST = """import os
import pathlib
import sys

# Tests import programs by module name: corpus/programs by default, or another
# directory (a watermarked copy, say) named by DUALMARK_PROGRAMS.
sys.path.insert(0, os.environ.get("DUALMARK_PROGRAMS", str(pathlib.Path(__file__).resolve().parent.parent / "programs")))
"""


def plan_for(idx):
    # 120 files: 4 without anchors, 4 single-variable, 4 two-variable,
    # 14 small, 14 mid, 64 large, 16 extra-large.
    if idx < 4:
        return "empty"
    if idx < 8:
        return "one"
    if idx < 12:
        return "pair"
    if idx < 26:
        return "small"
    if idx < 40:
        return "mid"
    if idx < 104:
        return "large"
    return "xl"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent))
    ap.add_argument("--count", type=int, default=120)
    ap.add_argument("--seed", type=int, default=1009)
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    (out / "programs").mkdir(parents=True, exist_ok=True)
    (out / "tests").mkdir(parents=True, exist_ok=True)
    for idx in range(args.count):
        rng = random.Random(args.seed * 100003 + idx)
        src, funcs = module_source(rng, idx, plan_for(idx))
        (out / "programs" / f"p{idx:03d}.py").write_text(src)
        (out / "tests" / f"p{idx:03d}_test.py").write_text(test_source(rng, idx, src, funcs))
    (out / "tests" / "conftest.py").write_text(CONFTEST)


if __name__ == "__main__":
    main()
