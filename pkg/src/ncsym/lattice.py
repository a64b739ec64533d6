"""The refinement order on the set partitions of a fixed ground set.

Möbius values use the closed product formula over the blocks of the coarser
partition; the defining recursion is exponential and lives only in the test
suite, where it certifies the closed form on small intervals.
"""

from __future__ import annotations

import itertools
from math import factorial

from .partitions import SetPartition


def _require_same_ground(a: SetPartition, b: SetPartition) -> None:
    if a.ground != b.ground:
        raise ValueError(
            f"ground sets differ: {sorted(a.ground)} vs {sorted(b.ground)}"
        )


def _owner_map(coarser: SetPartition) -> dict:
    return {x: i for i, blk in enumerate(coarser.blocks) for x in blk}


def is_refinement(finer: SetPartition, coarser: SetPartition) -> bool:
    """True when every block of ``finer`` lies inside some block of ``coarser``."""
    _require_same_ground(finer, coarser)
    owner = _owner_map(coarser)
    return all(len({owner[x] for x in blk}) == 1 for blk in finer.blocks)


def meet(a: SetPartition, b: SetPartition) -> SetPartition:
    """Greatest lower bound: all nonempty pairwise block intersections."""
    _require_same_ground(a, b)
    blocks = []
    for blk in a.blocks:
        s = set(blk)
        for other in b.blocks:
            inter = s.intersection(other)
            if inter:
                blocks.append(inter)
    return SetPartition(blocks)


def join(a: SetPartition, b: SetPartition) -> SetPartition:
    """Least upper bound, via union-find over shared block membership."""
    _require_same_ground(a, b)
    parent = {x: x for x in a.ground}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for blk in itertools.chain(a.blocks, b.blocks):
        root = find(blk[0])
        for x in blk[1:]:
            parent[find(x)] = root
    groups = {}
    for x in a.ground:
        groups.setdefault(find(x), []).append(x)
    return SetPartition(groups.values())


def set_partitions(ground):
    """Yield every partition of ``ground`` exactly once.

    Enumeration follows restricted growth strings in lexicographic order
    over the sorted ground set, so the one-block partition comes first and
    the all-singletons partition last.  Memory use is constant.
    """
    elems = sorted(ground)
    n = len(elems)
    if n == 0:
        yield SetPartition(())
        return
    rgs = [0] * n
    while True:
        blocks = {}
        for x, b in zip(elems, rgs):
            blocks.setdefault(b, []).append(x)
        yield SetPartition(blocks.values())
        i = n - 1
        while i > 0 and rgs[i] > max(rgs[:i]):
            i -= 1
        if i == 0:
            return
        rgs[i] += 1
        for j in range(i + 1, n):
            rgs[j] = 0


def refinements(pi: SetPartition):
    """Yield every partition finer than or equal to ``pi``."""
    if not pi.blocks:
        yield pi
        return
    per_block = [list(set_partitions(blk)) for blk in pi.blocks]
    for combo in itertools.product(*per_block):
        yield SetPartition(blk for part in combo for blk in part.blocks)


def coarsenings(pi: SetPartition):
    """Yield every partition coarser than or equal to ``pi``."""
    l = len(pi.blocks)
    for grouping in set_partitions(range(1, l + 1)):
        yield SetPartition(
            tuple(itertools.chain.from_iterable(pi.blocks[i - 1] for i in grp))
            for grp in grouping.blocks
        )


def interval(lower: SetPartition, upper: SetPartition):
    """Yield all partitions between ``lower`` and ``upper``; empty unless lower <= upper."""
    _require_same_ground(lower, upper)
    if not is_refinement(lower, upper):
        return
    owner = _owner_map(upper)
    bundles = [[] for _ in upper.blocks]
    for blk in lower.blocks:
        bundles[owner[blk[0]]].append(blk)
    choices = [list(coarsenings(SetPartition(bundle))) for bundle in bundles]
    for combo in itertools.product(*choices):
        yield SetPartition(blk for part in combo for blk in part.blocks)


def mobius(finer: SetPartition, coarser: SetPartition) -> int:
    """Möbius value of the interval [finer, coarser].

    Equals the product over blocks of ``coarser`` of (-1)^(c-1) (c-1)!, where
    c counts the blocks of ``finer`` inside that block.
    """
    _require_same_ground(finer, coarser)
    owner = _owner_map(coarser)
    counts = [0] * len(coarser.blocks)
    for blk in finer.blocks:
        owners = {owner[x] for x in blk}
        if len(owners) != 1:
            raise ValueError(f"{finer} does not refine {coarser}")
        counts[owners.pop()] += 1
    value = 1
    for c in counts:
        value *= (-1) ** (c - 1) * factorial(c - 1)
    return value


def mobius_to_top(pi: SetPartition) -> int:
    """Möbius value from ``pi`` up to the one-block partition of its ground set."""
    if not pi.blocks:
        raise ValueError("the empty partition has no one-block coarsening")
    l = len(pi.blocks)
    return (-1) ** (l - 1) * factorial(l - 1)
