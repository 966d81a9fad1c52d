import random

import pytest

from sl2shares.diagrams import (
    ChordDiagram,
    Share,
    complete_diagram,
    crossing_share,
    enumerate_diagrams,
    four_term,
    parse_diagram,
    parse_share,
    random_share,
    reverse_strand,
)
from sl2shares.exactalg import C, ONE, PolyC, PolyC1C2X, PolyCY
from sl2shares.rewrite import Engine, canonical_key, complexity, rewrite_step
from sl2shares.sl2rep import oracle_wsl2_diagram, verify_normal_form

X = PolyC1C2X.monomial(0, 0, 1)
C1 = PolyC1C2X.monomial(1, 0, 0)


def test_single_bridge(engine):
    assert engine.normal_form(parse_share("1 | 1")) == X


def test_two_crossing_chords_on_one_strand(engine):
    assert engine.normal_form(parse_share("1 2 1 2 |")) == C1 * C1 - C1


def test_crossing_pair(engine):
    s = parse_share("1 2 | 2 1")
    nf = engine.normal_form(s)
    assert nf == X * X + X
    assert verify_normal_form(s, nf)


@pytest.mark.parametrize(
    "word, expected",
    [
        ("", ONE),
        ("1 1", C),
        ("1 2 1 3 2 3", C * (C - 1) ** 2),
        ("1 2 3 1 2 3", C ** 3 - C * C * 3 + C * 2),
    ],
)
def test_diagram_values(engine, word, expected):
    d = ChordDiagram(()) if not word else parse_diagram(word)
    assert engine.wsl2_diagram(d) == expected


@pytest.mark.parametrize(
    "text",
    ["1 2 3 | 3 2 1", "1 2 1 | 2", "1 3 2 1 | 2 3", "1 2 3 1 | 3 2", "1 2 | 1 3 2 3", "1 2 3 4 | 4 2 3 1"],
)
def test_share_normal_forms_against_representations(engine, text):
    s = parse_share(text)
    assert verify_normal_form(s, engine.normal_form(s))


def test_every_small_diagram_matches_oracle(engine):
    for n in range(5):
        for d in enumerate_diagrams(n):
            assert engine.wsl2_diagram(d) == oracle_wsl2_diagram(d), str(d)


def test_values_are_monic_of_degree_n(engine):
    for d in enumerate_diagrams(5):
        v = engine.wsl2_diagram(d)
        assert v.degree == 5 and v.is_monic()


def test_multiplicativity(engine):
    rng = random.Random(3)
    pool = enumerate_diagrams(3) + enumerate_diagrams(2)
    for _ in range(20):
        a, b = rng.choice(pool), rng.choice(pool)
        assert engine.wsl2_diagram(a * b) == engine.wsl2_diagram(a) * engine.wsl2_diagram(b)


def test_strand_reversal_choice_does_not_matter(engine):
    rng = random.Random(11)
    for _ in range(30):
        s = random_share(rng, rng.randint(1, 5))
        assert engine.wsl2_share_S(reverse_strand(s, 1)) == engine.wsl2_share_S(reverse_strand(s, 2))


def test_arch_free_shares_are_monic_in_x(engine):
    rng = random.Random(7)
    for _ in range(30):
        m = rng.randint(1, 6)
        perm = list(range(1, m + 1))
        rng.shuffle(perm)
        v = engine.wsl2_share_S(Share(tuple(range(1, m + 1)), tuple(perm)))
        assert v.degree == m and v.coeff(m) == ONE


def test_four_term_combinations_vanish(engine):
    rng = random.Random(99)
    for _ in range(60):
        n = rng.randint(2, 5)
        s = random_share(rng, n)
        a, b = rng.sample(range(1, n + 1), 2)
        assert not engine.combination_normal_form(four_term(s, a, rng.randint(0, 1), b))


def test_four_term_with_a_wrong_sign_does_not_vanish(engine):
    # guards against a vacuous four-term check
    s = parse_share("1 2 1 2 |")
    combo = four_term(s, 1, 1, 2)
    flipped = [(-q if i == 3 else q, t) for i, (q, t) in enumerate(combo)]
    assert engine.combination_normal_form(flipped)


def test_cache_agrees_with_fresh_engine(engine):
    for text in ["1 2 3 4 | 4 3 2 1", "1 2 1 3 | 3 2"]:
        s = parse_share(text)
        assert engine.normal_form(s) == Engine().normal_form(s)


def test_canonical_key_strand_swap():
    key1, swapped1 = canonical_key((1, 2, 1), (2,))
    key2, swapped2 = canonical_key((2,), (1, 2, 1))
    assert key1 == key2 and swapped1 != swapped2


def test_each_rule_application_simplifies():
    s = parse_share("1 2 3 1 | 3 2")
    rank = complexity(s.strand1, s.strand2)
    terms = rewrite_step(s)
    assert terms
    assert all(complexity(t.strand1, t.strand2) < rank for _, t in terms)


def test_cache_round_trip(tmp_path, engine):
    s = crossing_share(4)
    engine.normal_form(s)
    path = tmp_path / "cache.jsonl"
    engine.save(path)
    fresh = Engine()
    assert fresh.load(path) == len(engine.cache)
    assert fresh.cache == engine.cache


def test_complete_diagrams(engine):
    for m in range(1, 5):
        assert engine.wsl2_diagram(complete_diagram(m)) == oracle_wsl2_diagram(complete_diagram(m))
