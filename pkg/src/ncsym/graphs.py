"""Complete multipartite graphs built from set partitions.

The graph of a partition has the partition's elements as vertices and an
edge between every pair lying in distinct blocks, so its independent sets
are exactly the subsets of blocks and its stable partitions are exactly the
refinements.  Only the defining partition is stored; edges are derived.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import prod

from .lattice import refinements
from .partitions import SetPartition

ENUMERATION_VERTEX_CAP = 7


class MultipartiteGraph:
    """The complete multipartite graph of a partition of {1..n}."""

    __slots__ = ("parts",)

    def __init__(self, parts: SetPartition):
        if not parts.is_standard():
            raise ValueError(f"vertex set must be {{1..n}}, got {parts}")
        self.parts = parts

    @property
    def n(self) -> int:
        return self.parts.size

    def edges(self) -> list:
        owner = {x: i for i, blk in enumerate(self.parts.blocks) for x in blk}
        return [
            (i, j)
            for i in range(1, self.n + 1)
            for j in range(i + 1, self.n + 1)
            if owner[i] != owner[j]
        ]

    def __eq__(self, other):
        return isinstance(other, MultipartiteGraph) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"MultipartiteGraph({self.parts!r})"


def stable_partitions(graph: MultipartiteGraph):
    """Yield the vertex partitions into independent sets: the refinements."""
    return refinements(graph.parts)


class ChromaticPolynomial:
    """An integer polynomial stored as falling-factorial multiplicities.

    ``counts[l]`` is the number of stable partitions with l blocks; the value
    at k is the sum of counts[l] * k (k-1) ... (k-l+1).  Expansion to
    monomial coefficients happens only on demand.
    """

    __slots__ = ("counts",)

    def __init__(self, counts: dict):
        self.counts = {l: c for l, c in counts.items() if c}

    def evaluate(self, k: int) -> int:
        return sum(
            c * prod(k - i for i in range(l)) for l, c in self.counts.items()
        )

    def quotient_at_zero(self) -> int:
        """The value of (polynomial / k) at k = 0.

        Each falling factorial contributes (-1)^(l-1) (l-1)! once its leading
        k is stripped; needs at least one vertex so every term has one.
        """
        if 0 in self.counts:
            raise ValueError("constant term present; the polynomial is not divisible by k")
        return sum(
            c * prod(-i for i in range(1, l)) for l, c in self.counts.items()
        )

    def coefficients(self) -> list:
        """Monomial coefficients, index = power of k."""
        degree = max(self.counts, default=0)
        coeffs = [0] * (degree + 1)
        for l, c in self.counts.items():
            poly = [1]
            for i in range(l):
                # multiply by (k - i)
                prev = poly
                poly = [0] * (len(prev) + 1)
                for j, v in enumerate(prev):
                    poly[j + 1] += v
                    poly[j] -= i * v
            for j, v in enumerate(poly):
                coeffs[j] += c * v
        return coeffs

    def __eq__(self, other):
        return isinstance(other, ChromaticPolynomial) and self.counts == other.counts

    __hash__ = None

    def __repr__(self):
        return f"ChromaticPolynomial({self.counts!r})"

    def __str__(self):
        coeffs = self.coefficients()
        pieces = []
        for power in range(len(coeffs) - 1, -1, -1):
            c = coeffs[power]
            if not c:
                continue
            mag = abs(c)
            if power == 0:
                body = str(mag)
            elif power == 1:
                body = "k" if mag == 1 else f"{mag}*k"
            else:
                body = f"k^{power}" if mag == 1 else f"{mag}*k^{power}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces) if pieces else "0"


def chromatic_polynomial(graph: MultipartiteGraph) -> ChromaticPolynomial:
    """Proper-coloring counter as a sum of falling factorials over stable partitions."""
    counts = {}
    for tau in stable_partitions(graph):
        l = len(tau.blocks)
        counts[l] = counts.get(l, 0) + 1
    return ChromaticPolynomial(counts)


def count_acyclic_unique_sink(sigma: SetPartition, sink: int) -> int:
    """Acyclic orientations of the graph of ``sigma`` with a unique sink at ``sink``.

    Production route: (-1)^(n-1) times the chromatic polynomial divided by k,
    evaluated at zero.  The count does not depend on the chosen sink, which
    is validated but otherwise unused here; the enumeration backend checks
    the independence for real.
    """
    n = sigma.size
    if n < 1:
        raise ValueError("need at least one vertex")
    if not 1 <= sink <= n:
        raise ValueError(f"sink {sink} is not a vertex of {{1..{n}}}")
    chi = chromatic_polynomial(MultipartiteGraph(sigma))
    return (-1) ** (n - 1) * chi.quotient_at_zero()


@lru_cache(maxsize=None)
def _acyclic_sink_counts(sigma: SetPartition) -> tuple:
    """Per-vertex unique-sink counts from direct orientation enumeration.

    Backtracks over edge directions, pruning any partial orientation that
    already closes a directed cycle (tracked with reachability bitmasks), and
    tallies each completed acyclic orientation under its sink when that sink
    is unique.
    """
    n = sigma.size
    if n > ENUMERATION_VERTEX_CAP:
        raise ValueError(
            f"orientation enumeration is capped at {ENUMERATION_VERTEX_CAP} vertices"
        )
    edges = MultipartiteGraph(sigma).edges()
    counts = [0] * (n + 1)

    def recurse(idx: int, reach: list, outdeg: list) -> None:
        if idx == len(edges):
            sinks = [v for v in range(1, n + 1) if outdeg[v] == 0]
            if len(sinks) == 1:
                counts[sinks[0]] += 1
            return
        u, w = edges[idx]
        for a, b in ((u, w), (w, u)):
            if reach[b] >> a & 1:
                continue  # b already reaches a; orienting a -> b closes a cycle
            new_reach = list(reach)
            mask = new_reach[b]
            for x in range(1, n + 1):
                if new_reach[x] >> a & 1:
                    new_reach[x] |= mask
            new_outdeg = list(outdeg)
            new_outdeg[a] += 1
            recurse(idx + 1, new_reach, new_outdeg)

    recurse(0, [1 << v for v in range(n + 1)], [0] * (n + 1))
    return tuple(counts)


def count_acyclic_unique_sink_by_enumeration(sigma: SetPartition, sink: int) -> int:
    """Oracle backend: enumerate orientations and filter on acyclicity and sink."""
    n = sigma.size
    if n < 1:
        raise ValueError("need at least one vertex")
    if not 1 <= sink <= n:
        raise ValueError(f"sink {sink} is not a vertex of {{1..{n}}}")
    return _acyclic_sink_counts(sigma)[sink]


def count_proper_colorings(graph: MultipartiteGraph, k: int) -> int:
    """Brute-force proper-coloring count, for cross-checking the polynomial."""
    edges = graph.edges()
    total = 0
    for coloring in itertools.product(range(k), repeat=graph.n):
        if all(coloring[i - 1] != coloring[j - 1] for i, j in edges):
            total += 1
    return total
