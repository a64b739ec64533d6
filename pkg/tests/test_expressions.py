import itertools
from fractions import Fraction
from math import factorial

import pytest

from ncsym import (
    DegreeLimitError,
    NCSymExpr,
    NCTensorExpr,
    Permutation,
    SetPartition,
    SymExpr,
    convert,
    convert_sym,
    coproduct,
    expand_nc,
    lift_R,
    omega,
    permute,
    product,
    rho,
    set_partitions,
    set_partitions_of_shape,
    tensor_convert,
    x_coproduct_coefficient,
    x_e_expansion_coefficient,
    x_to_m_top,
    x_top_coproduct_coefficient,
)

from conftest import elt, ip_, sp_


def top(n):
    return SetPartition.whole(range(1, n + 1))


def test_expression_validation():
    with pytest.raises(ValueError):
        NCSymExpr("q", {})
    with pytest.raises(ValueError):
        NCSymExpr("p", {sp_("2/3"): 1})  # not a standard ground set
    assert NCSymExpr("p", {sp_("12"): 0}).is_zero()


def test_convert_worked_values():
    x = elt("x", "13/2")
    assert convert(x, "p") == NCSymExpr("p", {sp_("13/2"): 1, sp_("1/2/3"): -1})
    assert convert(x, "m") == NCSymExpr(
        "m", {sp_("1/2/3"): -1, sp_("12/3"): -1, sp_("1/23"): -1}
    )
    assert convert(x, "x") is x
    assert convert(elt("x", "12"), "e") == NCSymExpr("e", {sp_("12"): -1})


def test_convert_round_trips():
    for n in range(6):
        for pi in set_partitions(range(1, n + 1)):
            for b1 in "mpex":
                start = NCSymExpr.element(b1, pi)
                for b2 in "mpex":
                    assert convert(convert(start, b2), b1) == start


def test_convert_matches_oracle():
    from ncsym import NCPolynomial

    k = 4
    for n in range(4):
        for pi in set_partitions(range(1, n + 1)):
            want = expand_nc("x", pi, k)
            in_m = convert(NCSymExpr.element("x", pi), "m")
            acc = NCPolynomial(k)
            for sigma, c in in_m.terms.items():
                acc = acc + c * expand_nc("m", sigma, k)
            assert acc == want


def test_product():
    assert product(elt("p", "13/24"), elt("p", "13/2")) == elt("p", "13/24/57/6")
    b = elt("p", "12/3")
    assert product(NCSymExpr.unit("p"), b) == b
    assert product(elt("x", "12"), elt("x", "1")) == elt("x", "12/3")
    # monomial products route through p and come back exact; the noncommuting
    # square of m{1} keeps each ordered pair once
    got = product(elt("m", "1"), elt("m", "1"))
    assert got == NCSymExpr("m", {sp_("12"): 1, sp_("1/2"): 1})
    from ncsym import NCPolynomial, expand_nc

    k = 3
    acc = NCPolynomial(k)
    for sigma, c in got.terms.items():
        acc = acc + c * expand_nc("m", sigma, k)
    assert acc == expand_nc("m", sp_("1"), k) * expand_nc("m", sp_("1"), k)


def test_product_mixed_basis_converts_right_operand():
    got = product(elt("p", "1"), elt("x", "1"))  # the two degree-1 elements agree
    assert got == elt("p", "1/2")


def test_coproduct_power_example():
    t = coproduct(elt("p", "13/2"))
    e = SetPartition.empty()
    assert t == NCTensorExpr(
        "p",
        {
            (e, sp_("13/2")): 1,
            (sp_("12"), sp_("1")): 1,
            (sp_("1"), sp_("12")): 1,
            (sp_("13/2"), e): 1,
        },
    )


def test_coproduct_unit():
    assert coproduct(NCSymExpr.unit("p")) == NCTensorExpr.unit("p")
    assert coproduct(NCSymExpr.unit("x")) == NCTensorExpr.unit("x")


def test_coproduct_x_coefficient_six():
    t = coproduct(elt("x", "1234"))
    assert t.coefficient(sp_("1/2"), sp_("12")) == 6


def test_x_coproduct_coefficient():
    assert x_coproduct_coefficient(top(4), sp_("1/2"), sp_("12")) == 6
    assert x_coproduct_coefficient(top(5), SetPartition.empty(), top(5)) == 1
    assert x_top_coproduct_coefficient(4, sp_("1/2"), sp_("12")) == 6
    with pytest.raises(ValueError):
        x_coproduct_coefficient(top(4), sp_("1/2"), sp_("1"))
    # general keys agree with the full expansion
    pi = sp_("123/4")
    t = coproduct(NCSymExpr.element("x", pi))
    for a in range(5):
        for sigma in set_partitions(range(1, a + 1)):
            for tau in set_partitions(range(1, 5 - a)):
                assert x_coproduct_coefficient(pi, sigma, tau) == t.coefficient(
                    sigma, tau
                )


def test_coproduct_m_basis_round_trip():
    # m coproduct through p agrees with converting a p coproduct back
    for pi in set_partitions(range(1, 4)):
        direct = coproduct(NCSymExpr.element("m", pi))
        via = tensor_convert(coproduct(convert(NCSymExpr.element("m", pi), "p")), "m")
        assert direct == via


def test_omega():
    assert omega(elt("p", "13/2")) == elt("p", "13/2") * -1
    for basis in "mpex":
        for pi in set_partitions(range(1, 5)):
            e = NCSymExpr.element(basis, pi)
            assert omega(omega(e)) == e
    w = convert(omega(elt("x", "123")), "p")
    assert w == NCSymExpr(
        "p",
        {
            sp_("123"): 1,
            sp_("12/3"): 1,
            sp_("13/2"): 1,
            sp_("1/23"): 1,
            sp_("1/2/3"): 2,
        },
    )


def test_permute():
    eta = Permutation([1, 3, 2, 4])
    assert permute(eta, elt("x", "12/34")) == elt("x", "13/24")
    e = elt("p", "13/24")
    assert permute(Permutation.identity(4), e) == e
    with pytest.raises(ValueError):
        permute(Permutation.identity(3), e)
    for eta_tuple in itertools.permutations(range(1, 4)):
        eta = Permutation(eta_tuple)
        for pi in set_partitions(range(1, 4)):
            expr = NCSymExpr.element("p", pi)
            assert permute(eta, omega(expr)) == omega(permute(eta, expr))


def test_rho():
    assert rho(elt("m", "13/2")) == SymExpr("m", {ip_(2, 1): 1})
    assert rho(elt("m", "13/24")) == SymExpr("m", {ip_(2, 2): 2})
    assert rho(elt("p", "13/24")) == SymExpr("p", {ip_(2, 2): 1})
    assert rho(elt("e", "123")) == SymExpr("e", {ip_(3): 6})
    for lam in (ip_(3), ip_(2, 1), ip_(2, 2), ip_(1, 1, 1)):
        from ncsym import bracket

        assert rho(NCSymExpr.element("x", bracket(lam))) == SymExpr("x", {lam: 1})


def test_rho_is_algebra_morphism():
    from ncsym import product_sym

    for total in range(6):
        for i in range(total + 1):
            for pi in set_partitions(range(1, i + 1)):
                for sigma in set_partitions(range(1, total - i + 1)):
                    a = NCSymExpr.element("p", pi)
                    b = NCSymExpr.element("p", sigma)
                    assert rho(product(a, b)) == product_sym(rho(a), rho(b))


def test_omega_extra_elements_single_signed():
    # the p-expansion of omega of any extra element carries one strict sign
    for n in range(1, 6):
        for pi in set_partitions(range(1, n + 1)):
            w = convert(omega(NCSymExpr.element("x", pi)), "p")
            values = list(w.terms.values())
            assert values
            assert all(v > 0 for v in values) or all(v < 0 for v in values)


def test_lift_R():
    for n in range(7):
        for lam in {pi.shape() for pi in set_partitions(range(1, n + 1))}:
            lifted = lift_R(SymExpr.element("p", lam))
            assert rho(lifted) == SymExpr("p", {lam: 1})
    assert lift_R(SymExpr.unit("p")) == NCSymExpr.unit("p")
    # the symmetrized lift of the degree-3 extra function is the one-block element
    got = lift_R(SymExpr.element("x", ip_(3)))
    assert got == convert(elt("x", "123"), "p")


def test_lift_R_shape_counts():
    from ncsym import lambda_factorial, lambda_superfactorial

    for n in range(9):
        by_shape = {}
        for tau in set_partitions(range(1, n + 1)):
            by_shape[tau.shape()] = by_shape.get(tau.shape(), 0) + 1
        for lam, count in by_shape.items():
            assert count == factorial(n) // (
                lambda_factorial(lam) * lambda_superfactorial(lam)
            )
            assert len(set_partitions_of_shape(lam)) == count


def test_x_to_m_top():
    assert x_to_m_top(3) == NCSymExpr(
        "m",
        {sp_("1/2/3"): 2, sp_("1/23"): 1, sp_("12/3"): 1, sp_("13/2"): 1},
    )
    assert x_to_m_top(1) == elt("m", "1")
    assert x_to_m_top(2) == NCSymExpr("m", {sp_("1/2"): -1})
    for n in range(1, 6):
        assert x_to_m_top(n) == convert(NCSymExpr.element("x", top(n)), "m")


def test_x_e_expansion_coefficient():
    assert x_e_expansion_coefficient(top(2), sp_("12")) == -1
    assert x_e_expansion_coefficient(sp_("1/2/3"), sp_("12/3")) == 0
    with pytest.raises(ValueError):
        x_e_expansion_coefficient(top(3), sp_("12"))
    # degree 3: every nonzero coefficient is 1/2, the bottom coefficient vanishes
    values = {
        str(s): x_e_expansion_coefficient(top(3), s)
        for s in set_partitions(range(1, 4))
    }
    assert values == {
        "1,2,3": Fraction(1, 2),
        "1,2/3": Fraction(1, 2),
        "1,3/2": Fraction(1, 2),
        "1/2,3": Fraction(1, 2),
        "1/2/3": Fraction(0),
    }
    for n in range(5):
        for pi in set_partitions(range(1, n + 1)):
            ee = convert(NCSymExpr.element("x", pi), "e")
            for sigma in set_partitions(range(1, n + 1)):
                assert x_e_expansion_coefficient(pi, sigma) == ee.coefficient(sigma)


def test_degree_cap(monkeypatch):
    monkeypatch.setenv("NCSYM_MAX_DEGREE", "3")
    expr = NCSymExpr.element("x", top(4))
    with pytest.raises(DegreeLimitError):
        convert(expr, "m")
    with pytest.raises(DegreeLimitError):
        coproduct(expr)
    monkeypatch.setenv("NCSYM_MAX_DEGREE", "not-a-number")
    with pytest.raises(DegreeLimitError):
        convert(expr, "m")


def test_arithmetic_auto_conversion():
    a = elt("p", "12")
    b = elt("x", "12")
    total = a + b
    assert total.basis == "p"
    assert total == NCSymExpr("p", {sp_("12"): 2, sp_("1/2"): -1})
    assert (a - a).is_zero()
    assert (2 * a).coefficient(sp_("12")) == 2
    with_unit = a + 1
    assert with_unit.coefficient(SetPartition.empty()) == 1
