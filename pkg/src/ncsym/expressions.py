"""The graded algebra of symmetric functions in noncommuting variables.

Expressions are sparse rational combinations of set partitions carrying one
basis tag out of m, p, e, x.  All basis changes factor through the power sum
basis, where every route has a closed form:

    m at tau  = sum over coarsenings sigma of mu(tau, sigma) p at sigma
    p at tau  = sum over coarsenings sigma of m at sigma
    x at pi   = sum over refinements sigma of mu(sigma, pi) p at sigma
    p at pi   = sum over refinements of x
    e at s    = sum over refinements tau of mu(bottom, tau) p at tau
    p at tau  = (1 / mu(bottom, tau)) sum over refinements s of mu(s, tau) e at s

The product is the shifted concatenation of keys on the multiplicative p and
x bases; the coproduct on the p basis splits blocks between the tensor legs,
and on the x basis it is computed by the closed interval-sum formula for the
splitting coefficients, not by converting to p.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import sym as _sym
from .lattice import (
    coarsenings,
    interval,
    mobius,
    refinements,
    set_partitions,
)
from .limits import check_degree
from .partitions import (
    IntegerPartition,
    Permutation,
    SetPartition,
    apply_permutation,
    disjoint_union,
    lambda_factorial,
    lambda_superfactorial,
    slash,
)

BASES = ("m", "p", "e", "x")


def _validate_terms(terms) -> dict:
    clean = {}
    for pi, coeff in (terms or {}).items():
        if not isinstance(pi, SetPartition):
            raise ValueError(f"keys must be set partitions, got {pi!r}")
        if not pi.is_standard():
            raise ValueError(f"keys must partition {{1..k}}, got {pi}")
        c = Fraction(coeff)
        if c:
            clean[pi] = c
    return clean


class NCSymExpr:
    """Sparse rational combination of basis-tagged set partitions.

    Every key partitions an initial segment {1..k}; distinct degrees may mix
    within one expression, and the empty partition keys the degree-0 unit.
    Instances are immutable; arithmetic with a right operand in another basis
    converts that operand to the left operand's basis first.
    """

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.terms = _validate_terms(terms)

    @classmethod
    def element(cls, basis: str, pi: SetPartition) -> "NCSymExpr":
        return cls(basis, {pi: 1})

    @classmethod
    def unit(cls, basis: str) -> "NCSymExpr":
        return cls(basis, {SetPartition.empty(): 1})

    @classmethod
    def zero(cls, basis: str) -> "NCSymExpr":
        return cls(basis)

    def coefficient(self, pi: SetPartition) -> Fraction:
        return self.terms.get(pi, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set:
        return {pi.size for pi in self.terms}

    def __eq__(self, other):
        return (
            isinstance(other, NCSymExpr)
            and self.basis == other.basis
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self):
        return f"NCSymExpr({str(self)!r})"

    def __str__(self):
        from .parsing import format_ncsym

        return format_ncsym(self)

    def __add__(self, other):
        if isinstance(other, NCSymExpr):
            if other.basis != self.basis:
                other = convert(other, self.basis)
            terms = dict(self.terms)
            for pi, c in other.terms.items():
                terms[pi] = terms.get(pi, 0) + c
            return NCSymExpr(self.basis, terms)
        return self + Fraction(other) * NCSymExpr.unit(self.basis)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-1) * other

    def __rsub__(self, other):
        return (-1) * self + other

    def __neg__(self):
        return (-1) * self

    def scale(self, c) -> "NCSymExpr":
        return NCSymExpr(self.basis, {pi: v * c for pi, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NCSymExpr):
            return product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)


class NCTensorExpr:
    """Sparse combination of ordered pairs of set partitions, one basis tag.

    Coproduct output: both legs of every key are standard partitions.
    """

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        clean = {}
        for key, coeff in (terms or {}).items():
            left, right = key
            for leg in (left, right):
                if not isinstance(leg, SetPartition) or not leg.is_standard():
                    raise ValueError(f"tensor legs must partition {{1..k}}, got {leg}")
            c = Fraction(coeff)
            if c:
                clean[(left, right)] = c
        self.terms = clean

    @classmethod
    def unit(cls, basis: str) -> "NCTensorExpr":
        e = SetPartition.empty()
        return cls(basis, {(e, e): 1})

    def coefficient(self, left: SetPartition, right: SetPartition) -> Fraction:
        return self.terms.get((left, right), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, NCTensorExpr)
            and self.basis == other.basis
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self):
        return f"NCTensorExpr({str(self)!r})"

    def __str__(self):
        from .parsing import format_nctensor

        return format_nctensor(self)

    def __add__(self, other: "NCTensorExpr") -> "NCTensorExpr":
        if other.basis != self.basis:
            raise ValueError("cannot add tensors in different bases")
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, 0) + c
        return NCTensorExpr(self.basis, terms)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def scale(self, c) -> "NCTensorExpr":
        return NCTensorExpr(self.basis, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NCTensorExpr):
            return tensor_product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)


def _bottom(ground) -> SetPartition:
    return SetPartition.singletons(ground)


@lru_cache(maxsize=None)
def _key_to_p(basis: str, pi: SetPartition) -> tuple:
    if basis == "p":
        return ((pi, Fraction(1)),)
    if basis == "m":
        return tuple((sigma, Fraction(mobius(pi, sigma))) for sigma in coarsenings(pi))
    if basis == "x":
        return tuple((sigma, Fraction(mobius(sigma, pi))) for sigma in refinements(pi))
    if basis == "e":
        bottom = _bottom(pi.ground)
        return tuple((tau, Fraction(mobius(bottom, tau))) for tau in refinements(pi))
    raise ValueError(f"unknown basis {basis!r}")


@lru_cache(maxsize=None)
def _key_from_p(basis: str, tau: SetPartition) -> tuple:
    if basis == "p":
        return ((tau, Fraction(1)),)
    if basis == "m":
        return tuple((sigma, Fraction(1)) for sigma in coarsenings(tau))
    if basis == "x":
        return tuple((sigma, Fraction(1)) for sigma in refinements(tau))
    if basis == "e":
        bottom = _bottom(tau.ground)
        lead = mobius(bottom, tau)
        return tuple(
            (sigma, Fraction(mobius(sigma, tau), lead)) for sigma in refinements(tau)
        )
    raise ValueError(f"unknown basis {basis!r}")


@lru_cache(maxsize=None)
def _key_convert(basis: str, target: str, pi: SetPartition) -> tuple:
    if basis == target:
        return ((pi, Fraction(1)),)
    if basis == "p":
        return _key_from_p(target, pi)
    if target == "p":
        return _key_to_p(basis, pi)
    out = {}
    for sigma, c in _key_to_p(basis, pi):
        for tau, d in _key_from_p(target, sigma):
            out[tau] = out.get(tau, 0) + c * d
    return tuple((k, v) for k, v in out.items() if v)


def convert(expr: NCSymExpr, target: str) -> NCSymExpr:
    """Re-express in the target basis; all conversions are exact."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if target == expr.basis:
        return expr
    terms = {}
    for pi, c in expr.terms.items():
        check_degree(pi.size)
        for sigma, d in _key_convert(expr.basis, target, pi):
            terms[sigma] = terms.get(sigma, 0) + c * d
    return NCSymExpr(target, terms)


def product(a: NCSymExpr, b) -> NCSymExpr:
    """Bilinear product carrying the basis of the left operand.

    On the multiplicative p and x bases the product of two keys is their
    shifted concatenation; the other bases route through p and convert back.
    """
    if not isinstance(b, NCSymExpr):
        return a.scale(b)
    basis = a.basis
    if basis in ("p", "x"):
        bb = convert(b, basis)
        terms = {}
        for k1, c1 in a.terms.items():
            for k2, c2 in bb.terms.items():
                key = slash(k1, k2)
                terms[key] = terms.get(key, 0) + c1 * c2
        return NCSymExpr(basis, terms)
    return convert(product(convert(a, "p"), convert(b, "p")), basis)


def _ordered_splits(ground):
    elems = sorted(ground)
    gset = frozenset(elems)
    for r in range(len(elems) + 1):
        for chosen in itertools.combinations(elems, r):
            s1 = frozenset(chosen)
            yield s1, gset - s1


@lru_cache(maxsize=None)
def _key_coproduct(basis: str, pi: SetPartition) -> tuple:
    """Coproduct of one basis element over standardized leg pairs.

    p: one term per way of distributing whole blocks between the legs.
    x: for each ordered ground-set split and each pair of refinements
       (D1, D2) of the restrictions, the Möbius value of (D1 and D2 together,
       pi) is credited to every standardized pair of refinements of D1, D2.
    m, e: conversion to p, split there, legs converted back.
    """
    if basis == "p":
        out = {}
        l = len(pi.blocks)
        for r in range(l + 1):
            for chosen in itertools.combinations(range(l), r):
                in1 = set(chosen)
                left = SetPartition(pi.blocks[i] for i in chosen).standardize()
                right = SetPartition(
                    pi.blocks[i] for i in range(l) if i not in in1
                ).standardize()
                key = (left, right)
                out[key] = out.get(key, 0) + 1
        return tuple(out.items())
    if basis == "x":
        out = {}
        for s1, s2 in _ordered_splits(pi.ground):
            a1 = pi.restrict(s1)
            a2 = pi.restrict(s2)
            refs2 = list(refinements(a2))
            subs2 = {d2: [c.standardize() for c in refinements(d2)] for d2 in refs2}
            for d1 in refinements(a1):
                subs1 = [b.standardize() for b in refinements(d1)]
                for d2 in refs2:
                    w = mobius(disjoint_union(d1, d2), pi)
                    for b in subs1:
                        for c in subs2[d2]:
                            key = (b, c)
                            out[key] = out.get(key, 0) + w
        return tuple((k, v) for k, v in out.items() if v)
    out = {}
    for sigma, c in _key_convert(basis, "p", pi):
        for (left, right), d in _key_coproduct("p", sigma):
            for lt, lc in _key_convert("p", basis, left):
                for rt, rc in _key_convert("p", basis, right):
                    key = (lt, rt)
                    out[key] = out.get(key, 0) + c * d * lc * rc
    return tuple((k, v) for k, v in out.items() if v)


def coproduct(expr: NCSymExpr) -> NCTensorExpr:
    """Coproduct with both tensor legs standardized, in the expression's basis."""
    terms = {}
    for pi, c in expr.terms.items():
        check_degree(pi.size)
        for key, d in _key_coproduct(expr.basis, pi):
            terms[key] = terms.get(key, 0) + c * d
    return NCTensorExpr(expr.basis, terms)


def tensor_convert(t: NCTensorExpr, target: str) -> NCTensorExpr:
    """Convert both legs of every tensor term to the target basis."""
    if target == t.basis:
        return t
    terms = {}
    for (left, right), c in t.terms.items():
        for lt, lc in _key_convert(t.basis, target, left):
            for rt, rc in _key_convert(t.basis, target, right):
                key = (lt, rt)
                terms[key] = terms.get(key, 0) + c * lc * rc
    return NCTensorExpr(target, terms)


def tensor_product(t1: NCTensorExpr, t2: NCTensorExpr) -> NCTensorExpr:
    """Componentwise product of tensors, leg by leg."""
    if t1.basis != t2.basis:
        raise ValueError("cannot multiply tensors in different bases")
    basis = t1.basis
    terms = {}
    for (a1, a2), c in t1.terms.items():
        for (b1, b2), d in t2.terms.items():
            left = product(NCSymExpr.element(basis, a1), NCSymExpr.element(basis, b1))
            right = product(NCSymExpr.element(basis, a2), NCSymExpr.element(basis, b2))
            for k1, e1 in left.terms.items():
                for k2, e2 in right.terms.items():
                    key = (k1, k2)
                    terms[key] = terms.get(key, 0) + c * d * e1 * e2
    return NCTensorExpr(basis, terms)


def x_coproduct_coefficient(
    pi: SetPartition, sigma: SetPartition, tau: SetPartition
) -> Fraction:
    """Coefficient of the (sigma, tau) tensor term in the coproduct of x at pi.

    Computed by the closed splitting-coefficient sum: for each ordered split
    matching the leg degrees, the legs are pulled back onto the split parts
    and the Möbius values of the qualifying interleaved refinements are
    accumulated.  The full coproduct is never expanded.
    """
    for part in (pi, sigma, tau):
        if not part.is_standard():
            raise ValueError(f"arguments must partition {{1..k}}, got {part}")
    a, b, n = sigma.size, tau.size, pi.size
    if a + b != n:
        raise ValueError(f"leg degrees {a} + {b} do not sum to {n}")
    total = Fraction(0)
    elems = list(range(1, n + 1))
    for chosen in itertools.combinations(elems, a):
        s1 = list(chosen)
        in1 = set(chosen)
        s2 = [x for x in elems if x not in in1]
        left = sigma.relabel({i + 1: s1[i] for i in range(a)})
        right = tau.relabel({i + 1: s2[i] for i in range(b)})
        a1 = pi.restrict(s1)
        a2 = pi.restrict(s2)
        for d1 in interval(left, a1):
            for d2 in interval(right, a2):
                total += mobius(disjoint_union(d1, d2), pi)
    return total


def x_top_coproduct_coefficient(
    n: int, sigma: SetPartition, tau: SetPartition
) -> Fraction:
    """Same coefficient for the one-block element, by the direct signed sum.

    Sums (-1)^(l-1) (l-1)! over all split-respecting partitions coarser than
    the pulled-back legs, l counting blocks.  Used to cross-check the general
    route and the brute-force expansion against each other.
    """
    for part in (sigma, tau):
        if not part.is_standard():
            raise ValueError(f"arguments must partition {{1..k}}, got {part}")
    a, b = sigma.size, tau.size
    if a + b != n:
        raise ValueError(f"leg degrees {a} + {b} do not sum to {n}")
    if n == 0:
        return Fraction(1)  # the unit is grouplike
    total = 0
    elems = list(range(1, n + 1))
    for chosen in itertools.combinations(elems, a):
        s1 = list(chosen)
        in1 = set(chosen)
        s2 = [x for x in elems if x not in in1]
        left = sigma.relabel({i + 1: s1[i] for i in range(a)})
        right = tau.relabel({i + 1: s2[i] for i in range(b)})
        for nu1 in coarsenings(left):
            for nu2 in coarsenings(right):
                l = len(nu1.blocks) + len(nu2.blocks)
                total += (-1) ** (l - 1) * factorial(l - 1)
    return Fraction(total)


def omega(expr: NCSymExpr) -> NCSymExpr:
    """The involution scaling each power sum term by (-1)^(n - number of blocks)."""
    pe = convert(expr, "p")
    terms = {pi: c * (-1) ** (pi.size - len(pi.blocks)) for pi, c in pe.terms.items()}
    return convert(NCSymExpr("p", terms), expr.basis)


def permute(eta: Permutation, expr: NCSymExpr) -> NCSymExpr:
    """Relabel every key by the permutation; the expression must be homogeneous."""
    n = len(eta)
    terms = {}
    for pi, c in expr.terms.items():
        if pi.size != n:
            raise ValueError(
                f"permutation of size {n} cannot act on a degree {pi.size} term"
            )
        key = apply_permutation(eta, pi)
        terms[key] = terms.get(key, 0) + c
    return NCSymExpr(expr.basis, terms)


def rho(expr: NCSymExpr) -> _sym.SymExpr:
    """Project onto commuting variables.

    Keys collapse to their shapes; monomial terms pick up the multiplicity
    superfactorial and elementary terms the part factorial, power sums map
    with scalar one.  Extra-basis input converts to p first and the image is
    re-expressed in the commutative x-basis.
    """
    basis = expr.basis
    if basis == "x":
        return _sym.convert_sym(rho(convert(expr, "p")), "x")
    terms = {}
    for pi, c in expr.terms.items():
        lam = pi.shape()
        if basis == "m":
            scale = lambda_superfactorial(lam)
        elif basis == "e":
            scale = lambda_factorial(lam)
        else:
            scale = 1
        terms[lam] = terms.get(lam, 0) + c * scale
    return _sym.SymExpr(basis, terms)


@lru_cache(maxsize=None)
def _partitions_by_shape(n: int) -> dict:
    out = {}
    for tau in set_partitions(range(1, n + 1)):
        out.setdefault(tau.shape(), []).append(tau)
    return {lam: tuple(taus) for lam, taus in out.items()}


def set_partitions_of_shape(lam: IntegerPartition) -> tuple:
    """All partitions of {1..n} whose block sizes realize the given shape."""
    return _partitions_by_shape(lam.n).get(lam, ())


def lift_R(expr: _sym.SymExpr) -> NCSymExpr:
    """The symmetrizing right inverse of the projection, landing in the p basis.

    A power sum at shape lam lifts to (lam! lam^! / n!) times the sum of the
    power sums over all set partitions of that shape; projecting back down is
    the identity.
    """
    pe = _sym.convert_sym(expr, "p")
    terms = {}
    for lam, c in pe.terms.items():
        n = lam.n
        check_degree(n)
        scale = c * Fraction(
            lambda_factorial(lam) * lambda_superfactorial(lam), factorial(n)
        )
        for tau in set_partitions_of_shape(lam):
            terms[tau] = terms.get(tau, 0) + scale
    return NCSymExpr("p", terms)


def x_to_m_top(n: int) -> NCSymExpr:
    """Monomial expansion of the degree-n one-block extra element.

    The coefficient of each monomial term is, up to the global sign
    (-1)^(n-1), the number of acyclic orientations of the complete
    multipartite graph of the key with a unique sink at a fixed vertex.
    """
    from .graphs import count_acyclic_unique_sink

    if n < 1:
        raise ValueError("degree must be at least 1")
    check_degree(n)
    sign = (-1) ** (n - 1)
    terms = {}
    for sigma in set_partitions(range(1, n + 1)):
        c = count_acyclic_unique_sink(sigma, 1)
        if c:
            terms[sigma] = Fraction(sign * c)
    return NCSymExpr("m", terms)


def x_e_expansion_coefficient(pi: SetPartition, sigma: SetPartition) -> Fraction:
    """Coefficient of the elementary term at sigma in the e-expansion of x at pi.

    The interval sum of mu(tau, pi) mu(sigma, tau) / mu(bottom, tau) over the
    partitions tau between sigma and pi; zero when sigma does not refine pi.
    """
    if pi.ground != sigma.ground:
        raise ValueError(
            f"ground sets differ: {sorted(pi.ground)} vs {sorted(sigma.ground)}"
        )
    bottom = _bottom(pi.ground)
    total = Fraction(0)
    for tau in interval(sigma, pi):
        total += Fraction(mobius(tau, pi) * mobius(sigma, tau), mobius(bottom, tau))
    return total
