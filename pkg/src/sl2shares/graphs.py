"""Graph side: complements, joins, isomorphism, realization and the r-series pipeline.

All searches are exhaustive and meant for graphs with at most eight vertices.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .diagrams import (
    BudgetExceeded,
    ChordDiagram,
    Share,
    SimpleGraph,
    closure,
    crossing_share,
    intersection_graph,
    join,
    reverse_strand,
    two_colored_graph,
)
from . import genfun, rewrite
from .exactalg import PolyC
from .genfun import RSeries
from .share_space import SElem, share_element

MAX_PERMUTATION_VERTICES = 8
MAX_CIRCLE_VERTICES = 8


class NotRealizable(ValueError):
    """No arch-free share has the requested intersection graph."""


# --- constructions -----------------------------------------------------------


def discrete(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, ())


def complete(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, itertools.combinations(range(n), 2))


def path(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def wheel(rim: int) -> SimpleGraph:
    """Hub 0 joined to a rim cycle on ``1..rim``."""
    return join_graphs(discrete(1), cycle(rim))


def bull() -> SimpleGraph:
    """Triangle 0-1-2 with pendant vertices on 1 and 2."""
    return SimpleGraph.from_edges(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)])


def bw3() -> SimpleGraph:
    """The 3-wheel with every rim edge subdivided."""
    h, a, b, c, x, y, z = range(7)
    return SimpleGraph.from_edges(7, [(h, a), (h, b), (h, c), (a, x), (x, b), (b, y), (y, c), (c, z), (z, a)])


def obstructions() -> dict[str, SimpleGraph]:
    return {"W5": wheel(5), "W7": wheel(7), "BW3": bw3()}


def complement(g: SimpleGraph) -> SimpleGraph:
    return SimpleGraph.from_edges(g.n, (e for e in itertools.combinations(range(g.n), 2) if e not in g.edges))


def join_graphs(g1: SimpleGraph, g2: SimpleGraph) -> SimpleGraph:
    k = g1.n
    edges = list(g1.edges)
    edges += [(a + k, b + k) for a, b in g2.edges]
    edges += [(a, b + k) for a in range(g1.n) for b in range(g2.n)]
    return SimpleGraph.from_edges(g1.n + g2.n, edges)


def join_discrete(g: SimpleGraph, n: int) -> SimpleGraph:
    return join_graphs(g, discrete(n))


def induced(g: SimpleGraph, vertices) -> SimpleGraph:
    vs = list(vertices)
    idx = {v: i for i, v in enumerate(vs)}
    return SimpleGraph.from_edges(len(vs), ((idx[a], idx[b]) for a, b in g.edges if a in idx and b in idx))


# --- canonical form ------------------------------------------------------------


@dataclass(frozen=True)
class GraphCanon:
    n: int
    bits: int

    def graph(self) -> SimpleGraph:
        pairs = list(itertools.combinations(range(self.n), 2))
        return SimpleGraph.from_edges(self.n, (p for i, p in enumerate(pairs) if self.bits >> i & 1))


def _cells(g: SimpleGraph) -> list[list[int]]:
    """Vertex classes by an isomorphism-invariant signature, in a fixed order."""
    adj = g.adjacency()
    sig = {v: len(adj[v]) for v in range(g.n)}
    for _ in range(g.n):
        new = {v: (sig[v], tuple(sorted(sig[w] for w in adj[v]))) for v in range(g.n)}
        ranks = {s: i for i, s in enumerate(sorted(set(new.values())))}
        new = {v: ranks[new[v]] for v in range(g.n)}
        if len(set(new.values())) == len(set(sig.values())):
            sig = new
            break
        sig = new
    cells: dict[int, list[int]] = {}
    for v in range(g.n):
        cells.setdefault(sig[v], []).append(v)
    return [cells[k] for k in sorted(cells)]


def canonical_form(g: SimpleGraph) -> GraphCanon:
    """Least adjacency bitset over all labelings that respect the refined cells.

    The cell structure is itself invariant, so the minimum is the same for
    isomorphic graphs.
    """
    if g.n > MAX_PERMUTATION_VERTICES:
        raise BudgetExceeded(f"canonical form limited to {MAX_PERMUTATION_VERTICES} vertices")
    cells = _cells(g)
    pairs = list(itertools.combinations(range(g.n), 2))
    best = None
    for choice in itertools.product(*(itertools.permutations(c) for c in cells)):
        order = [v for part in choice for v in part]  # order[new] = old
        bits = 0
        for i, (a, b) in enumerate(pairs):
            if g.adjacent(order[a], order[b]):
                bits |= 1 << i
        # compare by reversed bit significance so earlier pairs dominate
        key = tuple(bits >> i & 1 for i in range(len(pairs)))
        if best is None or key < best[0]:
            best = (key, bits)
    return GraphCanon(g.n, best[1])


def is_isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    if sorted(g.degree(v) for v in range(g.n)) != sorted(h.degree(v) for v in range(h.n)):
        return False
    return canonical_form(g) == canonical_form(h)


# --- realization ---------------------------------------------------------------


def _share_from_orders(order1: list[int], order2: list[int]) -> Share:
    return Share(tuple(v + 1 for v in order1), tuple(v + 1 for v in order2))


def realize_permutation(g: SimpleGraph) -> Share | None:
    """An arch-free share whose bridge-crossing graph is ``g``, or None.

    Strand-2 order is forced by the strand-1 order: ``u`` precedes ``w`` on
    strand 2 iff it precedes on strand 1 and they are not adjacent, or
    follows on strand 1 and they are adjacent.  The strand-1 order is found by
    backtracking, rejecting any prefix whose forced relation has a 3-cycle.
    """
    n = g.n
    if n > MAX_PERMUTATION_VERTICES:
        raise BudgetExceeded(f"permutation realization limited to {MAX_PERMUTATION_VERTICES} vertices")

    def before2(u: int, w: int, pos1: dict[int, int]) -> bool:
        return (pos1[u] < pos1[w]) != g.adjacent(u, w)

    order: list[int] = []
    pos1: dict[int, int] = {}

    def extend() -> list[int] | None:
        if len(order) == n:
            return list(order)
        for v in range(n):
            if v in pos1:
                continue
            pos1[v] = len(order)
            order.append(v)
            ok = True
            for a, b in itertools.combinations(order[:-1], 2):
                # transitivity on every triple containing the new vertex
                t = [a, b, v]
                wins = [sum(before2(p, q, pos1) for q in t if q != p) for p in t]
                if sorted(wins) != [0, 1, 2]:
                    ok = False
                    break
            if ok:
                res = extend()
                if res is not None:
                    return res
            order.pop()
            del pos1[v]
        return None

    found = extend()
    if found is None:
        return None
    pos = {v: i for i, v in enumerate(found)}
    order2 = sorted(found, key=lambda v: sum(before2(w, v, pos) for w in found if w != v))
    return _share_from_orders(found, order2)


def realize_circle(g: SimpleGraph) -> ChordDiagram | None:
    """A chord diagram with intersection graph ``g``, or None.

    Builds the double-occurrence word left to right starting with vertex 0.
    Closing chord ``u`` is allowed only when the chords with exactly one end
    inside its span are precisely the neighbours of ``u``.
    """
    n = g.n
    if n > MAX_CIRCLE_VERTICES:
        raise BudgetExceeded(f"circle realization limited to {MAX_CIRCLE_VERTICES} vertices")
    if n == 0:
        return ChordDiagram(())
    adj = g.adjacency()
    word: list[int] = []
    opened: dict[int, int] = {}
    closed: dict[int, int] = {}

    def crossing_at_close(u: int) -> set[int]:
        start = opened[u]
        out = set()
        for w, p in opened.items():
            if w == u:
                continue
            q = closed.get(w)
            if p > start and q is None:
                out.add(w)
            elif p < start and q is not None and q > start:
                out.add(w)
        return out

    def step() -> bool:
        if len(word) == 2 * n:
            return True
        pos = len(word)
        for u in list(opened):
            if u in closed:
                continue
            if not adj[u] <= set(opened):
                continue
            if crossing_at_close(u) != adj[u]:
                continue
            closed[u] = pos
            word.append(u)
            if step():
                return True
            word.pop()
            del closed[u]
        for v in range(n):
            if v in opened:
                continue
            opened[v] = pos
            word.append(v)
            if step():
                return True
            word.pop()
            del opened[v]
        return False

    opened[0] = 0
    word.append(0)
    if not step():
        return None
    return ChordDiagram(tuple(v + 1 for v in word))


def share_graph(s: Share) -> SimpleGraph:
    """Bridge-crossing graph of a share."""
    return two_colored_graph(s).graph


def closure_share(g: SimpleGraph) -> Share:
    """Arch-free share whose closure has intersection graph ``g``.

    Closing flips the crossing relation between bridges, so this is the
    strand reversal of a share realizing ``g`` itself.
    """
    s = realize_permutation(g)
    if s is None:
        raise NotRealizable(f"{g.to_text()} is not a permutation graph")
    return reverse_strand(s)


# --- local complementation ---------------------------------------------------------


def local_complement(g: SimpleGraph, v: int) -> SimpleGraph:
    nb = sorted(g.neighbors(v))
    edges = set(g.edges)
    for a, b in itertools.combinations(nb, 2):
        edges ^= {(a, b)}
    return SimpleGraph(g.n, frozenset(edges))


def _embeds(h: SimpleGraph, g: SimpleGraph, induced_only: bool) -> bool:
    """Injective vertex map h -> g preserving edges (and non-edges if induced)."""
    if h.n > g.n:
        return False
    hadj, gadj = h.adjacency(), g.adjacency()
    order = sorted(range(h.n), key=lambda v: -len(hadj[v]))
    image: dict[int, int] = {}
    used: set[int] = set()

    def go(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in range(g.n):
            if w in used or len(gadj[w]) < len(hadj[v]):
                continue
            ok = True
            for u, x in image.items():
                if u in hadj[v]:
                    if x not in gadj[w]:
                        ok = False
                        break
                elif induced_only and x in gadj[w]:
                    ok = False
                    break
            if ok:
                image[v] = w
                used.add(w)
                if go(i + 1):
                    return True
                del image[v]
                used.discard(w)
        return False

    return go(0)


def contains_subgraph(g: SimpleGraph, h: SimpleGraph) -> bool:
    return _embeds(h, g, False)


def contains_induced(g: SimpleGraph, h: SimpleGraph) -> bool:
    return _embeds(h, g, True)


OBSTRUCTED = "OBSTRUCTED"
CLEAR = "CLEAR"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class BouchetReport:
    induced: str
    subgraph: str
    orbit_size: int
    exhausted: bool
    induced_witness: tuple | None  # (orbit member, obstruction name)
    subgraph_witness: tuple | None

    def to_json(self) -> dict:
        def wit(w):
            return None if w is None else {"graph": w[0].to_json(), "obstruction": w[1]}

        return {
            "induced": self.induced,
            "subgraph": self.subgraph,
            "orbit_size": self.orbit_size,
            "exhausted": self.exhausted,
            "induced_witness": wit(self.induced_witness),
            "subgraph_witness": wit(self.subgraph_witness),
        }


def bouchet_scan(g: SimpleGraph, budget: int = 1000) -> BouchetReport:
    """Explore the local-equivalence orbit of ``g`` breadth first.

    Each member is tested for containing W5, W7 or BW3, both as a subgraph and
    as an induced subgraph; the two verdicts are reported separately.
    ``budget`` caps the number of orbit members examined.
    """
    obs = obstructions()
    seen = {canonical_form(g)}
    queue = deque([g])
    visited = 0
    wit_ind = wit_sub = None
    while queue and visited < budget:
        h = queue.popleft()
        visited += 1
        for name, o in obs.items():
            if wit_sub is None and contains_subgraph(h, o):
                wit_sub = (h, name)
            if wit_ind is None and contains_induced(h, o):
                wit_ind = (h, name)
        if wit_sub is not None and wit_ind is not None:
            break
        for v in range(h.n):
            nxt = local_complement(h, v)
            key = canonical_form(nxt)
            if key not in seen:
                seen.add(key)
                queue.append(nxt)
    exhausted = not queue

    def verdict(w):
        if w is not None:
            return OBSTRUCTED
        return CLEAR if exhausted else INCONCLUSIVE

    return BouchetReport(verdict(wit_ind), verdict(wit_sub), visited, exhausted, wit_ind, wit_sub)


# --- the graph to r-series pipeline ----------------------------------------------


def share_rseries(s: Share, engine: rewrite.Engine | None = None) -> RSeries:
    """Residues of ``<s, y^n>``; the closure of ``s`` gives the graph."""
    el = share_element(s) if engine is None else SElem("X", engine.wsl2_share_S(s).coeffs)
    return genfun.gen_series(el)


def graph_rseries(g: SimpleGraph, engine: rewrite.Engine | None = None) -> RSeries:
    """Residues ``r_k`` with ``w((g, n)) = sum_k r_k (c - k(k+1)/2)^n``."""
    return share_rseries(closure_share(g), engine)


def join_diagram(s: Share, n: int) -> ChordDiagram:
    """Closure of ``s`` joined with the discrete graph on n vertices."""
    return join(s, crossing_share(n))


@dataclass(frozen=True)
class DualityRow:
    k: int
    r_graph: PolyC
    r_complement: PolyC
    ok: bool


@dataclass(frozen=True)
class DualityReport:
    graph: SimpleGraph
    rows: tuple
    passed: bool

    def to_json(self) -> dict:
        return {
            "graph": self.graph.to_json(),
            "passed": self.passed,
            "rows": [
                {"k": r.k, "r": r.r_graph.to_json(), "r_complement": r.r_complement.to_json(), "ok": r.ok}
                for r in self.rows
            ],
        }


def verify_duality(g: SimpleGraph, engine: rewrite.Engine | None = None) -> DualityReport:
    """Compare the r-series of ``g`` and of its complement, term by term.

    The complement's share is the strand reversal of ``g``'s share; its
    closure graph is checked to be the complement before anything else.
    """
    s = closure_share(g)
    t = reverse_strand(s)
    if not is_isomorphic(intersection_graph(closure(t)), complement(g)):
        raise AssertionError("strand reversal did not realize the complement")
    rg = share_rseries(s, engine)
    rc = share_rseries(t, engine)
    rows = []
    for k in range(g.n + 1):
        a, b = rg[k], rc[k]
        expect = a if (g.n - k) % 2 == 0 else -a
        rows.append(DualityRow(k, a, b, b == expect))
    extra = [k for k in set(rg.terms) | set(rc.terms) if k > g.n]
    passed = all(r.ok for r in rows) and not extra
    return DualityReport(g, tuple(rows), passed)


# --- enumeration ---------------------------------------------------------------------


def permutation_graph(perm) -> SimpleGraph:
    """Inversion graph of a permutation of ``0..n-1``."""
    n = len(perm)
    return SimpleGraph.from_edges(
        n, ((i, j) for i, j in itertools.combinations(range(n), 2) if perm[i] > perm[j])
    )


def permutation_graphs(n: int) -> list[SimpleGraph]:
    """One representative per isomorphism class of permutation graphs on n vertices."""
    reps: dict[GraphCanon, SimpleGraph] = {}
    for perm in itertools.permutations(range(n)):
        g = permutation_graph(perm)
        key = canonical_form(g)
        if key not in reps:
            reps[key] = key.graph()
    return [reps[k] for k in sorted(reps, key=lambda k: k.bits)]


def all_graphs(n: int) -> Iterator[SimpleGraph]:
    """One representative per isomorphism class of graphs on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        g = SimpleGraph.from_edges(n, (p for i, p in enumerate(pairs) if mask >> i & 1))
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            yield key.graph()
