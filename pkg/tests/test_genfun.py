from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sl2shares import genfun as gf
from sl2shares import share_space as ss
from sl2shares.diagrams import complete_diagram, crossing_share, join
from sl2shares.exactalg import C, ONE, PolyC
from sl2shares.share_space import SElem

K3N = {
    0: C * C * Fraction(1, 6),
    1: C * (C * C * 3 - C * 2 + 2) * Fraction(1, 5),
    2: C * (C * 4 - 3) * Fraction(1, 3),
    3: C * (C * C * 4 - C * 11 + 6) * Fraction(1, 10),
}


def yvec(m):
    return SElem.basis_vector("Y", m)


def test_gen_series_examples():
    assert gf.gen_series(SElem.basis_vector("E", 1)) == gf.RSeries({1: C})
    assert gf.gen_series(ss.one()) == gf.RSeries({0: ONE})
    assert gf.gen_series(yvec(3)) == gf.RSeries(K3N)


def test_series_values(engine):
    assert gf.series_values(yvec(1), 0) == C
    for n in range(5):
        assert gf.series_values(yvec(1), n) == C * (C - 1) ** n
    assert gf.series_values(yvec(3), 0) == C ** 3
    # the n-th value is the weight of the join diagram
    for n in range(4):
        assert gf.series_values(yvec(3), n) == engine.wsl2_diagram(join(crossing_share(3), crossing_share(n)))


def test_bipartite_values_symmetric():
    for m in range(6):
        for n in range(6):
            assert gf.series_values(yvec(m), n) == gf.series_values(yvec(n), m)


def test_dual_rseries():
    r = gf.RSeries(K3N)
    d = gf.dual_rseries(r, 3)
    assert [d[k] for k in range(4)] == [-K3N[0], K3N[1], -K3N[2], K3N[3]]
    assert gf.dual_rseries(gf.RSeries({0: ONE}), 0) == gf.RSeries({0: ONE})
    with pytest.raises(ValueError):
        gf.dual_rseries(r, 2)


@pytest.mark.parametrize("m", range(7))
def test_bipartite_recurrence_matches_eigen_decomposition(m):
    assert gf.cb_series(m) == gf.gen_series(yvec(m))


@pytest.mark.parametrize("m", range(7))
def test_split_recurrence_matches_eigen_decomposition(m):
    assert gf.split_series(m) == gf.gen_series(ss.basis_convert(SElem.basis_vector("X", m), "Y"))


def test_recurrence_base_cases():
    assert gf.cb_series(0) == gf.RSeries({0: ONE})
    assert gf.cb_series(3) == gf.RSeries(K3N)
    assert gf.split_series(3) == gf.RSeries({k: r if k % 2 else -r for k, r in K3N.items()})


def test_complete_graph_values(engine):
    assert gf.k_complete(1) == C
    assert gf.k_complete(2) == C * C - C
    assert gf.k_complete(3) == C ** 3 - C * C * 3 + C * 2
    for m in range(7):
        assert gf.k_complete(m) == engine.wsl2_diagram(complete_diagram(m))


def test_duality_at_algebra_level():
    # strand reversal is (-1)^m sigma on m-bridge elements
    for m in range(7):
        for basis in ("X", "Y"):
            v = SElem.basis_vector(basis, m)
            reversed_v = ss.sigma(v).scale((-1) ** m)
            assert gf.gen_series(reversed_v) == gf.dual_rseries(gf.gen_series(v), m)
            # sigma alone flips exactly the odd residues
            r = gf.gen_series(v)
            assert gf.gen_series(ss.sigma(v)) == gf.RSeries({k: p * (-1) ** k for k, p in r.terms.items()})


small = st.fractions(min_value=-4, max_value=4, max_denominator=3)
elements = st.lists(st.lists(small, max_size=3).map(PolyC), max_size=7).map(lambda cs: SElem("Y", tuple(cs)))


@settings(max_examples=40, deadline=None)
@given(elements)
def test_reconstruction_round_trip(v):
    assert gf.reconstruct_selem(gf.gen_series(v)) == v


def test_reconstruction_examples():
    assert gf.reconstruct_selem(gf.RSeries({1: C})) == yvec(1)
    assert gf.reconstruct_selem(gf.gen_series(yvec(3))) == yvec(3)


def test_reconstruction_rejects_foreign_series():
    with pytest.raises(gf.NotJoinSeries):
        gf.reconstruct_selem(gf.RSeries({2: C}))


def test_rseries_json_round_trip():
    r = gf.RSeries(K3N)
    assert gf.RSeries.from_json(r.to_json()) == r
    assert r.to_json()["terms"][0]["k"] == 0
