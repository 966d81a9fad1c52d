from fractions import Fraction

import numpy as np
import pytest

from sl2shares.diagrams import BudgetExceeded, parse_diagram, parse_share
from sl2shares.exactalg import C, PolyC, PolyC1C2X
from sl2shares.sl2rep import (
    casimir_value,
    evaluate_strands,
    interpolate,
    irrep,
    oracle_check_nf,
    oracle_wsl2_diagram,
    reps_separate,
    separating_reps,
    verify_normal_form,
)

X = PolyC1C2X.monomial(0, 0, 1)
C1 = PolyC1C2X.monomial(1, 0, 0)


@pytest.mark.parametrize("k", range(0, 7))
def test_irrep_brackets_and_casimir(k):
    r = irrep(k)
    assert r.check_brackets()
    cas = r.casimir()
    assert all(cas[i, j] == (casimir_value(k) if i == j else 0) for i in range(k + 1) for j in range(k + 1))


@pytest.mark.parametrize("k", range(1, 5))
def test_one_strand_contraction_is_casimir(k):
    # one chord on one strand, scaled by 4
    m = evaluate_strands([(1, 1)], [k])
    assert np.array_equal(m * Fraction(1, 4), irrep(k).casimir())


def test_interpolation_recovers_polynomial():
    p = C ** 3 - C * 2 + Fraction(1, 3)
    pts = [(Fraction(t), p(Fraction(t))) for t in range(4)]
    assert interpolate(pts) == p


@pytest.mark.parametrize(
    "word, expected",
    [
        ("1 1", C),
        ("1 2 1 2", C * C - C),
        ("1 2 3 1 2 3", C ** 3 - C * C * 3 + C * 2),
        ("1 2 1 3 2 3", C * (C - 1) ** 2),
    ],
)
def test_oracle_values(word, expected):
    assert oracle_wsl2_diagram(parse_diagram(word)) == expected


def test_interpolation_nodes_do_not_matter():
    d = parse_diagram("1 2 3 4 1 3 2 4")
    assert oracle_wsl2_diagram(d, ks=range(1, 6)) == oracle_wsl2_diagram(d, ks=range(2, 7))


def test_oracle_budget():
    with pytest.raises(BudgetExceeded):
        oracle_wsl2_diagram(parse_diagram("1 1 2 2 3 3"), budget=2)


def test_share_checks():
    assert oracle_check_nf(parse_share("1 | 1"), X, [(1, 1), (1, 2), (2, 2)])
    assert oracle_check_nf(parse_share("1 1 |"), C1, [(1, 1), (2, 1)])
    assert not oracle_check_nf(parse_share("1 | 1"), X * 2, [(1, 1)])


def test_crossing_pair_sign_is_plus():
    s = parse_share("1 2 | 2 1")
    reps = [(1, 1), (2, 1), (2, 2), (3, 2)]
    assert oracle_check_nf(s, X * X + X, reps)
    assert not oracle_check_nf(s, X * X - X, reps)


def test_separation_rank():
    reps = separating_reps((2, 2, 2))
    assert reps_separate(reps, (2, 2, 2))
    assert not reps_separate([(1, 1)], (2, 2, 2))


def test_verify_normal_form_detects_errors():
    s = parse_share("1 2 1 | 2")
    assert verify_normal_form(s, C1 * X - X)
    assert not verify_normal_form(s, C1 * X)
