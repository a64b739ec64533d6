import pytest

from ncsym import (
    MultipartiteGraph,
    SetPartition,
    chromatic_polynomial,
    count_acyclic_unique_sink,
    count_acyclic_unique_sink_by_enumeration,
    count_proper_colorings,
    set_partitions,
    stable_partitions,
)

from conftest import sp_


def test_edges():
    g = MultipartiteGraph(sp_("12/3"))
    assert g.edges() == [(1, 3), (2, 3)]
    assert MultipartiteGraph(sp_("123")).edges() == []
    with pytest.raises(ValueError):
        MultipartiteGraph(sp_("2/3"))


def test_stable_partitions():
    assert set(stable_partitions(MultipartiteGraph(sp_("1/2/3")))) == {sp_("1/2/3")}
    assert set(stable_partitions(MultipartiteGraph(sp_("12/3")))) == {
        sp_("1/2/3"),
        sp_("12/3"),
    }
    edgeless = MultipartiteGraph(sp_("1234"))
    assert set(stable_partitions(edgeless)) == set(set_partitions(range(1, 5)))


def test_chromatic_polynomial():
    k3 = chromatic_polynomial(MultipartiteGraph(sp_("1/2/3")))
    assert k3.coefficients() == [0, 2, -3, 1]
    assert str(k3) == "k^3 - 3*k^2 + 2*k"
    for k in range(5):
        assert k3.evaluate(k) == k * (k - 1) * (k - 2)
    edgeless = chromatic_polynomial(MultipartiteGraph(sp_("123")))
    assert edgeless.coefficients() == [0, 0, 0, 1]
    for n in range(1, 5):
        top = SetPartition.whole(range(1, n + 1))
        chi = chromatic_polynomial(MultipartiteGraph(top))
        coeffs = [0] * n + [1]
        assert chi.coefficients() == coeffs
    assert k3.evaluate(0) == 0


def test_chromatic_matches_brute_force():
    for n in range(6):
        for sigma in set_partitions(range(1, n + 1)):
            g = MultipartiteGraph(sigma)
            chi = chromatic_polynomial(g)
            for k in range(1, 5):
                assert chi.evaluate(k) == count_proper_colorings(g, k)


def test_sink_counts():
    assert count_acyclic_unique_sink(sp_("1/2/3"), 1) == 2
    assert count_acyclic_unique_sink_by_enumeration(sp_("1/2/3"), 3) == 2
    for n in range(2, 5):
        top = SetPartition.whole(range(1, n + 1))
        assert count_acyclic_unique_sink(top, 1) == 0
        assert count_acyclic_unique_sink_by_enumeration(top, 1) == 0
    assert count_acyclic_unique_sink(sp_("1/23"), 1) == 1
    assert count_acyclic_unique_sink_by_enumeration(sp_("1/23"), 2) == 1
    with pytest.raises(ValueError):
        count_acyclic_unique_sink(sp_("12/3"), 4)


def test_backend_agreement_and_sink_independence():
    for n in range(1, 6):
        for sigma in set_partitions(range(1, n + 1)):
            values = {
                v: count_acyclic_unique_sink_by_enumeration(sigma, v)
                for v in range(1, n + 1)
            }
            assert len(set(values.values())) == 1
            assert values[1] == count_acyclic_unique_sink(sigma, 1)


def test_enumeration_cap():
    big = SetPartition.singletons(range(1, 9))
    with pytest.raises(ValueError):
        count_acyclic_unique_sink_by_enumeration(big, 1)
    # the chromatic route has no such cap
    assert count_acyclic_unique_sink(big, 1) == 5040
