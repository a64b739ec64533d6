"""Classical symmetric functions indexed by integer partitions.

The m/p/e bases are related through one trusted route: each degree-n basis
element is expanded in n variables by the monomial oracle, its m-coordinates
are read off the exponent vectors, and the resulting matrices are inverted
exactly.  The multiplicative x-basis is defined through its power sum
expansion and inverted per degree the same way.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import monomials
from .lattice import mobius, refinements
from .limits import check_degree
from .partitions import IntegerPartition, bracket, concat, integer_partitions

BASES = ("m", "p", "e", "x")


class SymExpr:
    """Sparse rational combination of basis elements of one tagged basis.

    Terms map integer partitions to nonzero exact rationals; the empty
    partition keys the degree-0 unit.  Adding or multiplying expressions in
    different bases converts the right operand to the left operand's basis.
    """

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        clean = {}
        for lam, coeff in (terms or {}).items():
            if not isinstance(lam, IntegerPartition):
                raise ValueError(f"keys must be integer partitions, got {lam!r}")
            c = Fraction(coeff)
            if c:
                clean[lam] = c
        self.terms = clean

    @classmethod
    def element(cls, basis: str, lam: IntegerPartition) -> "SymExpr":
        return cls(basis, {lam: 1})

    @classmethod
    def unit(cls, basis: str) -> "SymExpr":
        return cls(basis, {IntegerPartition(): 1})

    @classmethod
    def zero(cls, basis: str) -> "SymExpr":
        return cls(basis)

    def coefficient(self, lam: IntegerPartition) -> Fraction:
        return self.terms.get(lam, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, SymExpr)
            and self.basis == other.basis
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self):
        return f"SymExpr({str(self)!r})"

    def __str__(self):
        from .parsing import format_sym

        return format_sym(self)

    def __add__(self, other):
        if isinstance(other, SymExpr):
            if other.basis != self.basis:
                other = convert_sym(other, self.basis)
            terms = dict(self.terms)
            for lam, c in other.terms.items():
                terms[lam] = terms.get(lam, 0) + c
            return SymExpr(self.basis, terms)
        return self + Fraction(other) * SymExpr.unit(self.basis)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-1) * other

    def __rsub__(self, other):
        return (-1) * self + other

    def __neg__(self):
        return (-1) * self

    def scale(self, c) -> "SymExpr":
        return SymExpr(self.basis, {lam: v * c for lam, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SymExpr):
            return product_sym(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)


@lru_cache(maxsize=None)
def _degree_partitions(n: int) -> tuple:
    return tuple(integer_partitions(n))


@lru_cache(maxsize=None)
def _to_m(basis: str, n: int) -> dict:
    """Each degree-n element of ``basis`` in m-coordinates, read at k = n."""
    k = max(n, 1)
    parts = _degree_partitions(n)
    out = {}
    for lam in parts:
        poly = monomials.expand_c(basis, lam, k)
        row = {}
        for gam in parts:
            exps = gam.parts + (0,) * (k - len(gam.parts))
            c = poly.coefficient(exps)
            if c:
                row[gam] = c
        out[lam] = row
    return out


def _invert_rows(keys: tuple, rows: dict) -> dict:
    """Invert the square matrix {key -> coordinates over keys} exactly."""
    n = len(keys)
    index = {lam: i for i, lam in enumerate(keys)}
    aug = []
    for i, lam in enumerate(keys):
        row = [Fraction(0)] * n
        for gam, c in rows[lam].items():
            row[index[gam]] = Fraction(c)
        aug.append(row + [Fraction(int(i == j)) for j in range(n)])
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise ValueError("basis matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    out = {}
    for j, gam in enumerate(keys):
        out[gam] = {
            keys[i]: aug[j][n + i] for i in range(n) if aug[j][n + i]
        }
    return out


@lru_cache(maxsize=None)
def _from_m(basis: str, n: int) -> dict:
    """Each degree-n monomial element in ``basis`` coordinates."""
    return _invert_rows(_degree_partitions(n), _to_m(basis, n))


@lru_cache(maxsize=None)
def _x_to_p_key(lam: IntegerPartition) -> dict:
    """x at ``lam`` as a Möbius-weighted sum of power sums over refinement shapes."""
    br = bracket(lam)
    out = {}
    for sigma in refinements(br):
        key = sigma.shape()
        out[key] = out.get(key, 0) + mobius(sigma, br)
    return {gam: Fraction(c) for gam, c in out.items() if c}


@lru_cache(maxsize=None)
def _p_to_x(n: int) -> dict:
    return _invert_rows(
        _degree_partitions(n), {lam: _x_to_p_key(lam) for lam in _degree_partitions(n)}
    )


def _compose(row: dict, table) -> dict:
    out = {}
    for mid, c in row.items():
        for gam, d in table(mid).items():
            out[gam] = out.get(gam, 0) + c * d
    return {gam: v for gam, v in out.items() if v}


@lru_cache(maxsize=None)
def _key_convert_sym(basis: str, target: str, lam: IntegerPartition) -> tuple:
    """Coordinates of one basis element in the target basis, as key/value pairs."""
    if basis == target:
        return ((lam, Fraction(1)),)
    n = lam.n
    if basis == "x":
        row = _x_to_p_key(lam)
        if target != "p":
            row = _compose(row, lambda mid: dict(_key_convert_sym("p", target, mid)))
    elif target == "x":
        prow = dict(_key_convert_sym(basis, "p", lam))
        row = _compose(prow, lambda mid: _p_to_x(n)[mid])
    elif basis == "m":
        row = _from_m(target, n)[lam]
    elif target == "m":
        row = _to_m(basis, n)[lam]
    else:
        row = _compose(_to_m(basis, n)[lam], lambda mid: _from_m(target, n)[mid])
    return tuple(row.items())


def convert_sym(expr: SymExpr, target: str) -> SymExpr:
    """Re-express a symmetric function in the target basis, exactly."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if target == expr.basis:
        return expr
    terms = {}
    for lam, c in expr.terms.items():
        check_degree(lam.n)
        for gam, d in _key_convert_sym(expr.basis, target, lam):
            terms[gam] = terms.get(gam, 0) + c * d
    return SymExpr(target, terms)


def product_sym(a: SymExpr, b: SymExpr) -> SymExpr:
    """Bilinear product; multiplicative bases concatenate keys, m routes through p."""
    if not isinstance(b, SymExpr):
        return a.scale(b)
    basis = a.basis
    if basis == "m":
        return convert_sym(product_sym(convert_sym(a, "p"), convert_sym(b, "p")), "m")
    bb = convert_sym(b, basis)
    terms = {}
    for lam, c in a.terms.items():
        for gam, d in bb.terms.items():
            key = concat(lam, gam)
            terms[key] = terms.get(key, 0) + c * d
    return SymExpr(basis, terms)


def omega_sym(expr: SymExpr) -> SymExpr:
    """The involution scaling each power sum term by (-1)^(n - number of parts)."""
    pe = convert_sym(expr, "p")
    terms = {
        lam: c * (-1) ** (lam.n - len(lam.parts)) for lam, c in pe.terms.items()
    }
    return convert_sym(SymExpr("p", terms), expr.basis)


def is_e_positive(expr: SymExpr):
    """Whether every coefficient of the elementary expansion is positive.

    Returns ``(True, None)`` or ``(False, (partition, coefficient))`` with the
    first offending term in canonical order.  Coefficients that cancel to
    zero do not appear in the sparse expansion and are not offenders.
    """
    ee = convert_sym(expr, "e")
    for lam in sorted(ee.terms, key=lambda l: (l.n, tuple(-p for p in l.parts))):
        if ee.terms[lam] <= 0:
            return False, (lam, ee.terms[lam])
    return True, None
