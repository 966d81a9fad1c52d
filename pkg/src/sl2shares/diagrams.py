"""Chord diagrams, two-strand diagrams (shares) and their intersection graphs.

A chord diagram is stored as a double-occurrence word read along the oriented
circle.  A share is a pair of words, one per strand, each read along the
strand's orientation; a label occurring once on each strand is a *bridge*, a
label occurring twice on one strand is an *arch*.

Conventions used throughout the package:

* ``closure(s)`` reads strand 1 and then strand 2 around the circle, so the
  parallel share ``1 2 | 1 2`` closes to two crossing chords;
* two bridges cross in the share iff they appear in different orders on the
  two strands, so ``1 2 | 1 2`` is ``x^2`` (no crossings) and ``1 2 | 2 1``
  is ``y^2`` (all crossings).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

WHITE = "white"  # arch
BLACK = "black"  # bridge

DEFAULT_MAX_CHORDS = 8


class DiagramError(ValueError):
    """Malformed diagram, share or graph text."""


class BudgetExceeded(RuntimeError):
    """A brute-force search was asked to go beyond its configured size."""


def _relabel(seq: Sequence[int]) -> tuple[int, ...]:
    names: dict[int, int] = {}
    out = []
    for a in seq:
        if a not in names:
            names[a] = len(names) + 1
        out.append(names[a])
    return tuple(out)


def _check_word(labels: Sequence[int]) -> None:
    counts: dict[int, int] = {}
    for a in labels:
        counts[a] = counts.get(a, 0) + 1
    bad = sorted(a for a, k in counts.items() if k != 2)
    if bad:
        raise DiagramError(f"labels must occur exactly twice; offending: {bad}")


def _tokens(text: str) -> list[int]:
    out = []
    for tok in text.split():
        try:
            out.append(int(tok))
        except ValueError:
            raise DiagramError(f"bad chord label {tok!r}") from None
    return out


@dataclass(frozen=True)
class ChordDiagram:
    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(self.word)
        _check_word(word)
        object.__setattr__(self, "word", _relabel(word))

    @property
    def n(self) -> int:
        return len(self.word) // 2

    def endpoints(self) -> dict[int, tuple[int, int]]:
        pos: dict[int, list[int]] = {}
        for i, a in enumerate(self.word):
            pos.setdefault(a, []).append(i)
        return {a: (p[0], p[1]) for a, p in pos.items()}

    def as_share(self) -> "Share":
        """The diagram cut open at the start of its word, on strand 1."""
        return Share(self.word, ())

    def __mul__(self, other: "ChordDiagram") -> "ChordDiagram":
        """Concatenation product of the arc presentations."""
        shift = self.n
        return ChordDiagram(self.word + tuple(a + shift for a in other.word))

    def __str__(self) -> str:
        return " ".join(map(str, self.word))


@dataclass(frozen=True)
class Share:
    strand1: tuple[int, ...]
    strand2: tuple[int, ...]

    def __post_init__(self):
        s1, s2 = tuple(self.strand1), tuple(self.strand2)
        _check_word(s1 + s2)
        word = _relabel(s1 + s2)
        object.__setattr__(self, "strand1", word[: len(s1)])
        object.__setattr__(self, "strand2", word[len(s1):])

    @property
    def n(self) -> int:
        return (len(self.strand1) + len(self.strand2)) // 2

    def labels(self) -> range:
        return range(1, self.n + 1)

    def bridges(self) -> list[int]:
        on1 = set(self.strand1)
        return sorted(a for a in set(self.strand2) if a in on1)

    def arches(self) -> list[tuple[int, int]]:
        """``(strand, label)`` for each arch."""
        out = []
        for k, strand in ((1, self.strand1), (2, self.strand2)):
            seen = set()
            for a in strand:
                if a in seen:
                    out.append((k, a))
                seen.add(a)
        return out

    def is_arch_free(self) -> bool:
        return not self.arches()

    def swap(self) -> "Share":
        return Share(self.strand2, self.strand1)

    def __str__(self) -> str:
        left = " ".join(map(str, self.strand1))
        right = " ".join(map(str, self.strand2))
        return f"{left} | {right}".strip() if right else f"{left} |"


# --- parsing ---------------------------------------------------------------


def parse_diagram(text: str) -> ChordDiagram:
    return ChordDiagram(tuple(_tokens(text)))


def parse_share(text: str) -> Share:
    if text.count("|") != 1:
        raise DiagramError("a share needs exactly one '|' between the strands")
    left, right = text.split("|")
    return Share(tuple(_tokens(left)), tuple(_tokens(right)))


def parallel_share(m: int) -> Share:
    """``x^m``: m bridges in the same order on both strands."""
    word = tuple(range(1, m + 1))
    return Share(word, word)


def crossing_share(m: int) -> Share:
    """``y^m``: m pairwise crossing bridges."""
    word = tuple(range(1, m + 1))
    return Share(word, word[::-1])


def permutation_share(perm: Sequence[int]) -> Share:
    """Bridges ``1..n`` on strand 1 in order, strand 2 read as ``perm`` (1-based)."""
    return Share(tuple(range(1, len(perm) + 1)), tuple(perm))


def complete_diagram(m: int) -> ChordDiagram:
    """The diagram with m pairwise crossing chords."""
    word = tuple(range(1, m + 1))
    return ChordDiagram(word + word)


# --- products --------------------------------------------------------------


def _shifted(s: Share, k: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return tuple(a + k for a in s.strand1), tuple(a + k for a in s.strand2)


def dot(i: Share, h: Share) -> Share:
    """Concatenate both strands: ``i`` first, then ``h``."""
    h1, h2 = _shifted(h, i.n)
    return Share(i.strand1 + h1, i.strand2 + h2)


def cross(i: Share, h: Share) -> Share:
    """Cross product: the bridges of ``i`` cross every bridge of ``h``."""
    h1, h2 = _shifted(h, i.n)
    return Share(i.strand1 + h1, h2 + i.strand2)


def closure(s: Share) -> ChordDiagram:
    return ChordDiagram(s.strand1 + s.strand2)


def join(i: Share, h: Share) -> ChordDiagram:
    """The diagram ``(i, h)``: closure of the dot product."""
    return closure(dot(i, h))


def reverse_strand(s: Share, strand: int = 1) -> Share:
    """Reverse the order of endpoints on one strand (no sign attached)."""
    if strand == 1:
        return Share(s.strand1[::-1], s.strand2)
    if strand == 2:
        return Share(s.strand1, s.strand2[::-1])
    raise ValueError("strand must be 1 or 2")


# --- graphs ----------------------------------------------------------------


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices ``0..n-1``."""

    n: int
    edges: frozenset

    def __post_init__(self):
        clean = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise DiagramError(f"loop at vertex {u + 1}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise DiagramError(f"edge {u + 1}-{v + 1} out of range")
            clean.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(clean))

    @classmethod
    def from_edges(cls, n: int, edges) -> "SimpleGraph":
        return cls(n, frozenset(tuple(e) for e in edges))

    def adjacent(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self, v: int) -> set[int]:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def to_text(self) -> str:
        body = ",".join(f"{a + 1}-{b + 1}" for a, b in sorted(self.edges))
        return f"{self.n}: {body}"

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [[a + 1, b + 1] for a, b in sorted(self.edges)]}

    @classmethod
    def from_json(cls, obj) -> "SimpleGraph":
        return cls.from_edges(obj["n"], ((a - 1, b - 1) for a, b in obj["edges"]))

    def __str__(self) -> str:
        return self.to_text()


def parse_graph(text: str) -> SimpleGraph:
    """Parse ``"n: u-v,u-v,..."`` with 1-based vertices."""
    head, sep, body = text.partition(":")
    if not sep:
        raise DiagramError("graph text must look like 'n: u-v,...'")
    try:
        n = int(head.strip())
    except ValueError:
        raise DiagramError(f"bad vertex count {head!r}") from None
    edges = []
    for tok in body.replace(" ", "").split(","):
        if not tok:
            continue
        a, dash, b = tok.partition("-")
        if not dash:
            raise DiagramError(f"bad edge {tok!r}")
        try:
            edges.append((int(a) - 1, int(b) - 1))
        except ValueError:
            raise DiagramError(f"bad edge {tok!r}") from None
    return SimpleGraph.from_edges(n, edges)


@dataclass(frozen=True)
class TwoColoredGraph:
    graph: SimpleGraph
    colors: tuple[str, ...]

    def forget_colors(self) -> SimpleGraph:
        return self.graph


def _alternate(p: tuple[int, int], q: tuple[int, int]) -> bool:
    (a, b), (c, d) = p, q
    return (a < c < b) != (a < d < b)


def intersection_graph(d: ChordDiagram) -> SimpleGraph:
    ends = d.endpoints()
    edges = [
        (a - 1, b - 1)
        for a, b in itertools.combinations(sorted(ends), 2)
        if _alternate(ends[a], ends[b])
    ]
    return SimpleGraph.from_edges(d.n, edges)


def two_colored_graph(s: Share) -> TwoColoredGraph:
    pos: dict[int, list[tuple[int, int]]] = {a: [] for a in s.labels()}
    for k, strand in ((1, s.strand1), (2, s.strand2)):
        for i, a in enumerate(strand):
            pos[a].append((k, i))
    arch = {a: p[0][0] == p[1][0] for a, p in pos.items()}
    edges = []
    for a, b in itertools.combinations(sorted(pos), 2):
        pa, pb = pos[a], pos[b]
        if arch[a] and arch[b]:
            hit = pa[0][0] == pb[0][0] and _alternate((pa[0][1], pa[1][1]), (pb[0][1], pb[1][1]))
        elif arch[a] or arch[b]:
            ar, br = (pa, pb) if arch[a] else (pb, pa)
            k, lo, hi = ar[0][0], ar[0][1], ar[1][1]
            hit = any(kk == k and lo < i < hi for kk, i in br)
        else:
            # bridges: pa[0] is on strand 1, pa[1] on strand 2
            hit = (pa[0][1] < pb[0][1]) != (pa[1][1] < pb[1][1])
        if hit:
            edges.append((a - 1, b - 1))
    colors = tuple(WHITE if arch[a] else BLACK for a in sorted(pos))
    return TwoColoredGraph(SimpleGraph.from_edges(s.n, edges), colors)


# --- canonical forms and enumeration --------------------------------------


def canonical_diagram(d: ChordDiagram) -> tuple[int, ...]:
    """Lexicographically least relabelled rotation of the word."""
    w = d.word
    if not w:
        return ()
    return min(_relabel(w[i:] + w[:i]) for i in range(len(w)))


def _pairings(points: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for i, other in enumerate(rest):
        for tail in _pairings(rest[:i] + rest[i + 1:]):
            yield [(first, other)] + tail


def raw_pairings(n: int, max_chords: int = DEFAULT_MAX_CHORDS) -> Iterator[ChordDiagram]:
    """All (2n-1)!! labelled pairings of 2n points on the circle."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > max_chords:
        raise BudgetExceeded(f"{n} chords exceeds the enumeration budget of {max_chords}")
    for pairing in _pairings(list(range(2 * n))):
        word = [0] * (2 * n)
        for lab, (a, b) in enumerate(pairing, start=1):
            word[a] = word[b] = lab
        yield ChordDiagram(tuple(word))


def enumerate_diagrams(n: int, max_chords: int = DEFAULT_MAX_CHORDS) -> list[ChordDiagram]:
    """One representative per rotation class of n-chord diagrams, sorted."""
    seen = set()
    for d in raw_pairings(n, max_chords):
        seen.add(canonical_diagram(d))
    return [ChordDiagram(w) for w in sorted(seen)]


# --- four-term combinations ---------------------------------------------------


def _locate(s: Share) -> dict[int, list[tuple[int, int]]]:
    pos: dict[int, list[tuple[int, int]]] = {a: [] for a in s.labels()}
    for k, strand in ((0, s.strand1), (1, s.strand2)):
        for i, a in enumerate(strand):
            pos[a].append((k, i))
    return pos


def four_term(s: Share, moving: int, end: int, fixed: int) -> list[tuple[int, Share]]:
    """The four-term combination sliding one end of chord ``moving`` past chord ``fixed``.

    The chosen end (0 or 1, in reading order) is removed and reinserted just
    before and just after each end of ``fixed``:
    ``before(f1) - after(f1) + before(f2) - after(f2)``.  Every weight system
    coming from a metrized Lie algebra sends it to zero.
    """
    if moving == fixed:
        raise DiagramError("the two chords must differ")
    pos = _locate(s)
    k, i = pos[moving][end]
    words = [list(s.strand1), list(s.strand2)]
    del words[k][i]
    out: list[tuple[int, Share]] = []
    for kk, w in enumerate(words):
        for jj, a in enumerate(w):
            if a != fixed:
                continue
            for sign, at in ((1, jj), (-1, jj + 1)):
                new = [list(words[0]), list(words[1])]
                new[kk].insert(at, moving)
                out.append((sign, Share(tuple(new[0]), tuple(new[1]))))
    return out


def random_share(rng, n: int) -> Share:
    """A uniformly random pairing of 2n points split at a random place into two strands."""
    labels = [a for a in range(1, n + 1) for _ in (0, 1)]
    rng.shuffle(labels)
    cut = rng.randint(0, 2 * n)
    return Share(tuple(labels[:cut]), tuple(labels[cut:]))
