from fractions import Fraction

import pytest

from ncsym import (
    NCSymExpr,
    SetPartition,
    SpeciesElement,
    SpeciesTensor,
    c_coefficient,
    convert,
    coproduct,
    fock_coproduct,
    fock_product,
    product,
    relabel,
    set_partitions,
    species_delta,
    species_mu,
)

from conftest import sp_


def sel(basis, text):
    return SpeciesElement.element(basis, sp_(text))


def test_relabel_example():
    got = relabel({1: 1, 6: 3, 3: 2, 8: 4}, sel("m", "1,6/3,8"))
    assert got == sel("m", "13/24")
    v = sel("p", "13/2")
    assert relabel({1: 1, 2: 2, 3: 3}, v) == v
    with pytest.raises(ValueError):
        relabel({1: 1}, v)
    with pytest.raises(ValueError):
        relabel({1: 5, 2: 5, 3: 6}, v)


def test_mu_monomial_example():
    got = species_mu(sel("m", "12"), sel("m", "3,5/4"))
    want = SpeciesElement(
        {1, 2, 3, 4, 5},
        "m",
        {sp_("1,2/3,5/4"): 1, sp_("1,2,3,5/4"): 1, sp_("1,2,4/3,5"): 1},
    )
    assert got == want


def test_mu_power_and_extra():
    assert species_mu(sel("p", "12"), sel("p", "3,5/4")) == sel("p", "1,2/3,5/4")
    assert species_mu(sel("x", "12"), sel("x", "3,5/4")) == sel("x", "1,2/3,5/4")
    with pytest.raises(ValueError):
        species_mu(sel("p", "12"), sel("x", "3"))
    with pytest.raises(ValueError):
        species_mu(sel("p", "12"), sel("p", "2,3"))


def test_delta_monomial_and_power():
    v = sel("m", "1,2/3,5/4")
    t = species_delta(v, {1, 2}, {3, 4, 5})
    assert t == SpeciesTensor(
        {1, 2}, {3, 4, 5}, "m", {(sp_("12"), sp_("3,5/4")): 1}
    )
    # a straddling block kills the component
    assert species_delta(sel("m", "13/2"), {1, 2}, {3}).is_zero()
    p = sel("p", "1,2/3,5/4")
    assert species_delta(p, {1, 2}, {3, 4, 5}) == SpeciesTensor(
        {1, 2}, {3, 4, 5}, "p", {(sp_("12"), sp_("3,5/4")): 1}
    )


def test_delta_extra_example():
    t = species_delta(sel("x", "123/4"), {1, 2}, {3, 4})
    assert t == SpeciesTensor(
        {1, 2},
        {3, 4},
        "x",
        {(sp_("12"), sp_("3/4")): -1, (sp_("1/2"), sp_("3/4")): 1},
    )
    v = sel("x", "12/3")
    full = species_delta(v, {1, 2, 3}, set())
    assert full.coefficient(sp_("12/3"), SetPartition.empty()) == 1
    with pytest.raises(ValueError):
        species_delta(v, {1}, {2})


def test_c_coefficient_values():
    a = sp_("123/4")
    s1, s2 = {1, 2}, {3, 4}
    assert c_coefficient(a, s1, s2, sp_("12"), sp_("3/4")) == -1
    assert c_coefficient(a, s1, s2, sp_("1/2"), sp_("3/4")) == 1
    for b in set_partitions(s1):
        for c in set_partitions(s2):
            if (b, c) in ((sp_("12"), sp_("3/4")), (sp_("1/2"), sp_("3/4"))):
                continue
            assert c_coefficient(a, s1, s2, b, c) == 0


def test_c_coefficient_defines_delta():
    for pi in set_partitions(range(1, 5)):
        v = SpeciesElement.element("x", pi)
        for s1 in ({1, 2}, {1, 3}, {2, 4}, {1, 2, 3}, set()):
            s2 = set(range(1, 5)) - s1
            t = species_delta(v, s1, s2)
            for b in set_partitions(s1):
                for c in set_partitions(s2):
                    assert t.coefficient(b, c) == c_coefficient(pi, s1, s2, b, c)


def test_fock_product():
    got = fock_product(sel("p", "13/24"), sel("p", "13/2"))
    assert got == sel("p", "13/24/57/6")
    v = sel("x", "13/24")
    assert fock_product(v, SpeciesElement.unit("x")) == v
    assert fock_product(sel("x", "13/24"), sel("x", "13/2")) == sel("x", "13/24/57/6")


def test_fock_coproduct_examples():
    t = fock_coproduct(sel("p", "13/2"))
    assert t == coproduct(NCSymExpr.element("p", sp_("13/2")))
    assert fock_coproduct(SpeciesElement.unit("x")).coefficient(
        SetPartition.empty(), SetPartition.empty()
    ) == 1
    t4 = fock_coproduct(sel("x", "1234"))
    assert t4.coefficient(sp_("1/2"), sp_("12")) == 6


def test_fock_bridge():
    for basis in ("m", "p", "x"):
        for n in range(4):
            for pi in set_partitions(range(1, n + 1)):
                v = SpeciesElement.element(basis, pi)
                assert fock_coproduct(v) == coproduct(NCSymExpr.element(basis, pi))
                for m in range(3):
                    for sigma in set_partitions(range(1, m + 1)):
                        w = SpeciesElement.element(basis, sigma)
                        got = fock_product(v, w)
                        want = product(
                            NCSymExpr.element(basis, pi),
                            NCSymExpr.element(basis, sigma),
                        )
                        assert dict(got.terms) == want.terms


def test_basis_triangle():
    from ncsym import mobius, refinements

    for ground in (set(range(1, 5)), {2, 5, 9, 11}):
        for a in set_partitions(ground):
            acc = {}
            for b in refinements(a):
                for c in refinements(b):
                    acc[c] = acc.get(c, 0) + mobius(c, b)
            acc = {k: v for k, v in acc.items() if v}
            assert acc == {a: 1}
