import itertools
from fractions import Fraction

import pytest

from sl2shares import graphs as gr
from sl2shares.diagrams import BudgetExceeded, SimpleGraph, closure, intersection_graph, two_colored_graph
from sl2shares.exactalg import C, PolyC
from sl2shares.genfun import RSeries, cb_series, split_series


def test_self_complementary_graphs():
    assert gr.is_isomorphic(gr.complement(gr.cycle(5)), gr.cycle(5))
    assert gr.is_isomorphic(gr.complement(gr.bull()), gr.bull())
    assert not gr.is_isomorphic(gr.complement(gr.path(4)), gr.cycle(4))


def test_join_with_discrete_is_bipartite():
    g = gr.join_discrete(gr.discrete(2), 3)
    k23 = SimpleGraph.from_edges(5, [(a, b) for a in range(2) for b in range(2, 5)])
    assert gr.is_isomorphic(g, k23)
    assert gr.is_isomorphic(gr.wheel(5), gr.join_graphs(gr.discrete(1), gr.cycle(5)))


def test_canonical_form_is_invariant():
    g = gr.bull()
    for perm in itertools.permutations(range(5)):
        h = SimpleGraph.from_edges(5, ((perm[a], perm[b]) for a, b in g.edges))
        assert gr.canonical_form(h) == gr.canonical_form(g)


def test_isomorphism_class_counts():
    # graphs on n vertices up to isomorphism: 1, 2, 4, 11, 34, 156
    assert [sum(1 for _ in gr.all_graphs(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]


def test_permutation_graph_counts_two_ways():
    for n in range(1, 7):
        by_perm = {gr.canonical_form(g) for g in gr.permutation_graphs(n)}
        by_search = {gr.canonical_form(g) for g in gr.all_graphs(n) if gr.realize_permutation(g) is not None}
        assert by_perm == by_search


def test_realize_permutation_examples():
    assert str(gr.realize_permutation(gr.discrete(2))) == "1 2 | 1 2"
    s = gr.realize_permutation(gr.path(3))
    assert gr.is_isomorphic(gr.share_graph(s), gr.path(3))
    assert gr.realize_permutation(gr.cycle(5)) is None


def test_reversal_realizes_complement():
    for n in range(1, 6):
        for g in gr.permutation_graphs(n):
            s = gr.realize_permutation(g)
            assert gr.is_isomorphic(gr.share_graph(s), g)
            assert gr.is_isomorphic(gr.share_graph(gr.reverse_strand(s)), gr.complement(g))
            assert set(two_colored_graph(s).colors) <= {"black"}


def test_realize_circle():
    d = gr.realize_circle(gr.complete(3))
    assert str(d) == "1 2 3 1 2 3"
    d = gr.realize_circle(gr.cycle(5))
    assert d is not None and gr.is_isomorphic(intersection_graph(d), gr.cycle(5))
    for name, g in gr.obstructions().items():
        assert gr.realize_circle(g) is None, name


def test_realize_circle_on_every_small_circle_graph():
    from sl2shares.diagrams import enumerate_diagrams

    seen = {gr.canonical_form(intersection_graph(d)) for n in range(6) for d in enumerate_diagrams(n)}
    for key in seen:
        g = key.graph()
        d = gr.realize_circle(g)
        assert d is not None and gr.canonical_form(intersection_graph(d)) == key


def test_budgets():
    with pytest.raises(BudgetExceeded):
        gr.realize_permutation(gr.discrete(9))
    with pytest.raises(BudgetExceeded):
        gr.realize_circle(gr.discrete(9))


def test_local_complement():
    p3 = gr.path(3)
    assert gr.local_complement(p3, 1) == gr.complete(3)
    g = gr.bull()
    for v in range(5):
        assert gr.local_complement(gr.local_complement(g, v), v) == g


def test_bouchet_scan():
    rep = gr.bouchet_scan(gr.wheel(5))
    assert rep.induced == gr.OBSTRUCTED and rep.subgraph == gr.OBSTRUCTED
    rep = gr.bouchet_scan(gr.cycle(5))
    assert rep.induced == gr.CLEAR and rep.subgraph == gr.CLEAR
    rep = gr.bouchet_scan(gr.cycle(6), budget=1)
    assert rep.induced == gr.INCONCLUSIVE


def test_subgraph_versus_induced():
    k6 = gr.complete(6)
    assert gr.contains_subgraph(k6, gr.wheel(5))
    assert not gr.contains_induced(k6, gr.wheel(5))


def test_graph_rseries_examples():
    assert gr.graph_rseries(gr.discrete(3)) == cb_series(3)
    assert gr.graph_rseries(gr.complete(3)) == split_series(3)
    bull = {
        1: (C ** 5 * 30 - C ** 4 * 60 - C ** 3 * 13 + C * C * 22 + C * 8) * Fraction(1, 70),
        3: (C ** 5 * 20 - C ** 4 * 115 + C ** 3 * 123 + C * C * 108 - C * 108) * Fraction(1, 45),
        5: (C ** 5 * 16 - C ** 4 * 200 + C ** 3 * 813 - C * C * 1224 + C * 540) * Fraction(1, 126),
    }
    assert gr.graph_rseries(gr.bull()) == RSeries(bull)
    with pytest.raises(gr.NotRealizable):
        gr.graph_rseries(gr.cycle(5))


def test_series_agrees_with_direct_evaluation(engine):
    for n in range(1, 6):
        for g in gr.permutation_graphs(n):
            s = gr.closure_share(g)
            r = gr.share_rseries(s, engine)
            for m in range(3):
                d = gr.join_diagram(s, m)
                assert gr.is_isomorphic(intersection_graph(d), gr.join_discrete(g, m))
                assert r.value(m) == engine.wsl2_diagram(d)


def test_duality_examples(engine):
    assert gr.verify_duality(gr.discrete(3), engine).passed
    rep = gr.verify_duality(gr.bull(), engine)
    assert rep.passed and all(not r.r_graph for r in rep.rows if r.k % 2 == 0)
    assert gr.verify_duality(gr.discrete(1), engine).passed


def test_duality_report_json(engine):
    js = gr.verify_duality(gr.path(3), engine).to_json()
    assert js["passed"] and [r["k"] for r in js["rows"]] == [0, 1, 2, 3]
