"""The Hopf monoid of set partitions over explicit finite ground sets.

Vector-space values are materialized only at concrete ground sets: an
element is a sparse combination of partitions of one declared ground set in
one of the m, p, x bases.  Products and coproducts are indexed by ordered
decompositions of the ground set; collapsing the grading over the standard
sets {1..n} and standardizing the coproduct legs recovers the graded algebra
in `expressions`.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .expressions import NCTensorExpr
from .lattice import interval, mobius, refinements
from .partitions import SetPartition, disjoint_union

BASES = ("m", "p", "x")


class SpeciesElement:
    """Sparse combination of partitions of one fixed ground set."""

    __slots__ = ("ground", "basis", "terms")

    def __init__(self, ground, basis: str, terms=None):
        if basis not in BASES:
            raise ValueError(f"unknown species basis {basis!r}")
        self.ground = frozenset(ground)
        self.basis = basis
        clean = {}
        for pi, coeff in (terms or {}).items():
            if not isinstance(pi, SetPartition) or pi.ground != self.ground:
                raise ValueError(f"{pi} does not partition {sorted(self.ground)}")
            c = Fraction(coeff)
            if c:
                clean[pi] = c
        self.terms = clean

    @classmethod
    def element(cls, basis: str, pi: SetPartition) -> "SpeciesElement":
        return cls(pi.ground, basis, {pi: 1})

    @classmethod
    def unit(cls, basis: str) -> "SpeciesElement":
        return cls((), basis, {SetPartition.empty(): 1})

    def coefficient(self, pi: SetPartition) -> Fraction:
        return self.terms.get(pi, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, SpeciesElement)
            and self.basis == other.basis
            and self.ground == other.ground
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self):
        return f"SpeciesElement({str(self)!r})"

    def __str__(self):
        from .parsing import format_species

        return format_species(self)

    def __add__(self, other: "SpeciesElement") -> "SpeciesElement":
        if other.basis != self.basis or other.ground != self.ground:
            raise ValueError("can only add species elements on one ground set and basis")
        terms = dict(self.terms)
        for pi, c in other.terms.items():
            terms[pi] = terms.get(pi, 0) + c
        return SpeciesElement(self.ground, self.basis, terms)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def scale(self, c) -> "SpeciesElement":
        return SpeciesElement(
            self.ground, self.basis, {pi: v * c for pi, v in self.terms.items()}
        )

    __mul__ = scale
    __rmul__ = scale


class SpeciesTensor:
    """Sparse combination of partition pairs over one ordered ground decomposition."""

    __slots__ = ("left_ground", "right_ground", "basis", "terms")

    def __init__(self, left_ground, right_ground, basis: str, terms=None):
        if basis not in BASES:
            raise ValueError(f"unknown species basis {basis!r}")
        self.left_ground = frozenset(left_ground)
        self.right_ground = frozenset(right_ground)
        self.basis = basis
        clean = {}
        for (left, right), coeff in (terms or {}).items():
            if left.ground != self.left_ground or right.ground != self.right_ground:
                raise ValueError(
                    f"tensor key ({left}, {right}) does not match the declared grounds"
                )
            c = Fraction(coeff)
            if c:
                clean[(left, right)] = c
        self.terms = clean

    def coefficient(self, left: SetPartition, right: SetPartition) -> Fraction:
        return self.terms.get((left, right), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, SpeciesTensor)
            and self.basis == other.basis
            and self.left_ground == other.left_ground
            and self.right_ground == other.right_ground
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self):
        return f"SpeciesTensor({str(self)!r})"

    def __str__(self):
        from .parsing import format_species_tensor

        return format_species_tensor(self)

    def __add__(self, other: "SpeciesTensor") -> "SpeciesTensor":
        if (
            other.basis != self.basis
            or other.left_ground != self.left_ground
            or other.right_ground != self.right_ground
        ):
            raise ValueError("tensor grounds or bases differ")
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, 0) + c
        return SpeciesTensor(self.left_ground, self.right_ground, self.basis, terms)

    def __sub__(self, other):
        return self + (-1) * other

    def scale(self, c) -> "SpeciesTensor":
        return SpeciesTensor(
            self.left_ground,
            self.right_ground,
            self.basis,
            {k: v * c for k, v in self.terms.items()},
        )

    __mul__ = scale
    __rmul__ = scale


def relabel(mapping: dict, v: SpeciesElement) -> SpeciesElement:
    """Transport an element along a bijection given as a dict on its ground set."""
    if set(mapping) != set(v.ground):
        raise ValueError(
            f"bijection domain {sorted(mapping)} differs from ground {sorted(v.ground)}"
        )
    images = list(mapping.values())
    if len(set(images)) != len(images):
        raise ValueError("relabeling map is not injective")
    return SpeciesElement(
        images, v.basis, {pi.relabel(mapping): c for pi, c in v.terms.items()}
    )


def _split_respecting(pi: SetPartition, s1: frozenset) -> bool:
    return all(set(blk) <= s1 or not (set(blk) & s1) for blk in pi.blocks)


def _mu_key(basis: str, a: SetPartition, b: SetPartition):
    if basis in ("p", "x"):
        yield disjoint_union(a, b), 1
        return
    # monomial rule: one coarse partition per partial matching of blocks
    la, lb = len(a.blocks), len(b.blocks)
    for k in range(min(la, lb) + 1):
        for asel in itertools.combinations(range(la), k):
            chosen = set(asel)
            for bsel in itertools.permutations(range(lb), k):
                used = set(bsel)
                blocks = [a.blocks[i] + b.blocks[j] for i, j in zip(asel, bsel)]
                blocks += [a.blocks[i] for i in range(la) if i not in chosen]
                blocks += [b.blocks[j] for j in range(lb) if j not in used]
                yield SetPartition(blocks), 1


def species_mu(a: SpeciesElement, b: SpeciesElement) -> SpeciesElement:
    """Product indexed by the ordered pair of the two disjoint ground sets."""
    if a.basis != b.basis:
        raise ValueError(f"mixed bases {a.basis!r} and {b.basis!r}")
    if a.ground & b.ground:
        raise ValueError(
            f"ground sets overlap: {sorted(a.ground)} and {sorted(b.ground)}"
        )
    terms = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            for key, w in _mu_key(a.basis, ka, kb):
                terms[key] = terms.get(key, 0) + ca * cb * w
    return SpeciesElement(a.ground | b.ground, a.basis, terms)


def _delta_key(basis: str, pi: SetPartition, s1: frozenset, s2: frozenset):
    if basis in ("m", "p"):
        if _split_respecting(pi, s1):
            yield (pi.restrict(s1), pi.restrict(s2)), 1
        return
    # x rule: weighted pairs of refinements of the two restrictions
    a1 = pi.restrict(s1)
    a2 = pi.restrict(s2)
    out = {}
    refs2 = list(refinements(a2))
    subs2 = {d2: list(refinements(d2)) for d2 in refs2}
    for d1 in refinements(a1):
        subs1 = list(refinements(d1))
        for d2 in refs2:
            w = mobius(disjoint_union(d1, d2), pi)
            for left in subs1:
                for right in subs2[d2]:
                    key = (left, right)
                    out[key] = out.get(key, 0) + w
    for key, w in out.items():
        if w:
            yield key, w


def species_delta(v: SpeciesElement, s1, s2) -> SpeciesTensor:
    """Coproduct component at the ordered decomposition (s1, s2) of the ground set."""
    s1, s2 = frozenset(s1), frozenset(s2)
    if s1 & s2 or (s1 | s2) != v.ground:
        raise ValueError(
            f"({sorted(s1)}, {sorted(s2)}) is not an ordered decomposition of {sorted(v.ground)}"
        )
    terms = {}
    for pi, c in v.terms.items():
        for key, w in _delta_key(v.basis, pi, s1, s2):
            terms[key] = terms.get(key, 0) + c * w
    return SpeciesTensor(s1, s2, v.basis, terms)


def c_coefficient(A: SetPartition, s1, s2, B: SetPartition, C: SetPartition) -> Fraction:
    """Splitting coefficient of the (B, C) tensor term in the x coproduct at A.

    The sum of mu(D, A) over the split-respecting partitions D below A whose
    restrictions are coarser than B and C respectively.
    """
    s1, s2 = frozenset(s1), frozenset(s2)
    if s1 & s2 or (s1 | s2) != A.ground:
        raise ValueError(
            f"({sorted(s1)}, {sorted(s2)}) is not an ordered decomposition of {sorted(A.ground)}"
        )
    if B.ground != s1 or C.ground != s2:
        raise ValueError("tensor legs must partition the two decomposition parts")
    total = 0
    for d1 in interval(B, A.restrict(s1)):
        for d2 in interval(C, A.restrict(s2)):
            total += mobius(disjoint_union(d1, d2), A)
    return Fraction(total)


def _require_standard(v: SpeciesElement) -> int:
    n = len(v.ground)
    if v.ground != frozenset(range(1, n + 1)):
        raise ValueError(f"need the standard ground {{1..{n}}}, got {sorted(v.ground)}")
    return n


def fock_product(v: SpeciesElement, w: SpeciesElement) -> SpeciesElement:
    """Graded product: shift the second factor past the first, then multiply."""
    n = _require_standard(v)
    _require_standard(w)
    shifted = relabel({i: i + n for i in w.ground}, w) if w.ground else w
    return species_mu(v, shifted)


def fock_coproduct(v: SpeciesElement) -> NCTensorExpr:
    """Graded coproduct: sum over all ordered splits with standardized legs."""
    n = _require_standard(v)
    elems = list(range(1, n + 1))
    terms = {}
    for r in range(n + 1):
        for chosen in itertools.combinations(elems, r):
            s1 = frozenset(chosen)
            s2 = frozenset(elems) - s1
            t = species_delta(v, s1, s2)
            for (left, right), c in t.terms.items():
                key = (left.standardize(), right.standardize())
                terms[key] = terms.get(key, 0) + c
    return NCTensorExpr(v.basis, terms)
