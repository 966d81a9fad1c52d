import random

import pytest

from sl2shares.diagrams import (
    BLACK,
    WHITE,
    ChordDiagram,
    DiagramError,
    Share,
    closure,
    complete_diagram,
    cross,
    crossing_share,
    dot,
    enumerate_diagrams,
    four_term,
    intersection_graph,
    join,
    parallel_share,
    parse_diagram,
    parse_graph,
    parse_share,
    random_share,
    raw_pairings,
    reverse_strand,
    two_colored_graph,
)


def test_parse_normalizes_labels():
    assert parse_diagram("7 3 7 3").word == (1, 2, 1, 2)
    s = parse_share("5 2 | 2 5")
    assert (s.strand1, s.strand2) == ((1, 2), (2, 1))


@pytest.mark.parametrize("bad", ["1 2", "1 1 1", "1 2 2 1 3"])
def test_parse_rejects_bad_words(bad):
    with pytest.raises(DiagramError):
        parse_diagram(bad)


def test_bridges_and_arches():
    s = parse_share("1 2 1 | 2")
    assert s.bridges() == [2]
    assert len(s.arches()) == 1
    assert not s.is_arch_free()


def test_parallel_and_crossing_shares():
    assert str(parallel_share(3)) == "1 2 3 | 1 2 3"
    assert str(crossing_share(3)) == "1 2 3 | 3 2 1"
    assert two_colored_graph(parallel_share(3)).graph.edges == frozenset()
    assert len(two_colored_graph(crossing_share(3)).graph.edges) == 3


def test_closure_swaps_crossing_relation():
    # bridges parallel in the share cross after closing, and vice versa
    assert len(intersection_graph(closure(parallel_share(3))).edges) == 3
    assert len(intersection_graph(closure(crossing_share(3))).edges) == 0


def test_products_count_chords():
    a, b = crossing_share(2), parallel_share(3)
    assert dot(a, b).n == cross(a, b).n == 5
    assert dot(crossing_share(1), crossing_share(1)) == parallel_share(2)
    assert cross(crossing_share(1), crossing_share(1)) == crossing_share(2)


def test_join_makes_all_bridges_of_different_factors_cross():
    g = intersection_graph(join(crossing_share(2), crossing_share(3)))
    assert len(g.edges) == 6  # K_{2,3}


def test_reverse_strand_complements_bridge_graph():
    s = parse_share("1 2 3 4 | 2 4 1 3")
    g = two_colored_graph(s).graph
    h = two_colored_graph(reverse_strand(s)).graph
    assert g.edges.isdisjoint(h.edges)
    assert len(g.edges) + len(h.edges) == 6


def test_colors_and_arch_rules():
    tc = two_colored_graph(parse_share("1 2 1 | 2"))
    assert tc.colors == (WHITE, BLACK)
    assert (0, 1) in tc.graph.edges  # bridge end inside the arch
    tc = two_colored_graph(parse_share("1 1 2 | 2"))
    assert tc.graph.edges == frozenset()


def test_enumeration_counts():
    # chord diagrams up to rotation: 1, 1, 2, 5, 18, 105, 902
    assert [len(enumerate_diagrams(n)) for n in range(7)] == [1, 1, 2, 5, 18, 105, 902]
    assert [sum(1 for _ in raw_pairings(n)) for n in range(6)] == [1, 1, 3, 15, 105, 945]


def test_complete_diagram_graph():
    g = intersection_graph(complete_diagram(4))
    assert len(g.edges) == 6


def test_graph_text_round_trip():
    g = parse_graph("5: 1-2,1-3,2-3,2-4,3-5")
    assert parse_graph(g.to_text()) == g
    assert type(g).from_json(g.to_json()) == g
    with pytest.raises(DiagramError):
        parse_graph("3: 1-1")
    with pytest.raises(DiagramError):
        parse_graph("3: 1-4")


def test_four_term_shapes():
    s = parse_share("1 2 3 | 3 1 2")
    combo = four_term(s, 1, 0, 2)
    assert [sign for sign, _ in combo] == [1, -1, 1, -1]
    assert all(t.n == 3 for _, t in combo)


def test_random_share_is_valid():
    rng = random.Random(5)
    for _ in range(50):
        s = random_share(rng, 4)
        assert s.n == 4


def test_closure_graph_versus_colored_graph():
    # arch relations survive closing unchanged; bridge pairs flip
    rng = random.Random(17)
    for _ in range(100):
        s = random_share(rng, rng.randint(1, 5))
        closed = intersection_graph(closure(s))
        tc = two_colored_graph(s)
        for a in range(s.n):
            for b in range(a + 1, s.n):
                both_bridges = tc.colors[a] == BLACK and tc.colors[b] == BLACK
                same = closed.adjacent(a, b) == tc.graph.adjacent(a, b)
                assert same != both_bridges
