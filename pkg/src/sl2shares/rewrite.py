"""Normal forms of two-strand chord diagrams under the sl2 weight system.

Every share is rewritten into a polynomial in ``c1, c2, x`` by the following
rules, tried in order:

(a) an arch of length 0 on strand ``s`` contributes a factor ``c_s``; an arch
    of length 1 contributes ``c_s - 1`` (leaf relation);
(b) otherwise the shortest arch (leftmost on ties) of length ``L >= 2`` is
    shortened by one step using the sl2 six-term identity below;
(c) with no arches left, the leftmost adjacent pair of crossing bridges on
    strand 1 is uncrossed by the four-term relation;
(d) what remains is ``L`` parallel bridges, worth ``x**L``.

For an arch ``p Q1 .. QL p`` whose interior endpoints belong to distinct chords
``q1 .. qL`` the identity used in (b) is::

    W = W' - D + sum_{j<L} ( R_j - S_j )

where ``W'`` has the right end of ``p`` moved left past ``QL``, ``D`` is ``W``
with ``p`` deleted, ``S_j`` is ``D`` with the endpoints ``Qj`` and ``QL``
exchanged, and ``R_j`` is ``D`` with ``Qj, QL`` joined into a new arch and the
far ends of ``qj, qL`` joined into a new chord.  It follows from
``sum_e f_abe f_cde = -(d_ac d_bd - d_ad d_bc)`` for sl2.

The four-term relation used in (c), for a chord end ``M`` moved around the two
ends ``Q, Q'`` of another chord, is::

    D(M<Q) - D(M>Q) + D(M<Q') - D(M>Q') = 0

Each produced term is strictly simpler than its parent in the well-order
(chord count, then "has arches" before "arch-free", then shortest arch length
or number of crossings); :func:`rewrite_step` asserts this.
"""

from __future__ import annotations

import json
import sys
import threading
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterable, Tuple

from .diagrams import ChordDiagram, Share, crossing_share
from .exactalg import PolyC, PolyC1C2X, PolyCY

CACHE_FORMAT = "sl2shares-nf-v1"

Word = Tuple[int, ...]
Key = Tuple[Word, Word]
IntPoly = Dict[Tuple[int, int, int], int]

ShareCombo = Dict[Share, PolyC1C2X]


def _relabel(s1: Word, s2: Word) -> Key:
    names: dict[int, int] = {}
    w = []
    for a in s1 + s2:
        if a not in names:
            names[a] = len(names) + 1
        w.append(names[a])
    return tuple(w[: len(s1)]), tuple(w[len(s1):])


def _min_rotation(w: Word) -> Word:
    if not w:
        return w
    best = None
    for i in range(len(w)):
        cand = _relabel(w[i:] + w[:i], ())[0]
        if best is None or cand < best:
            best = cand
    return best


def canonical_key(s1: Word, s2: Word) -> tuple[Key, bool]:
    """Canonical cache key and whether the strands were swapped to reach it.

    Symmetries used: swapping the strands (exchanges ``c1`` and ``c2``),
    reversing both strands at once (the antipode fixes ``c1, c2, x``), and
    rotating a single closed strand when the other one is empty.
    """
    if not s2 and s1:
        return ((_min_rotation(s1), ()), False)
    if not s1 and s2:
        return ((_min_rotation(s2), ()), True)
    plain = min(_relabel(s1, s2), _relabel(s1[::-1], s2[::-1]))
    swapped = min(_relabel(s2, s1), _relabel(s2[::-1], s1[::-1]))
    if swapped < plain:
        return swapped, True
    return plain, False


# --- integer polynomial helpers (all relations have integer coefficients) --


def _padd(acc: IntPoly, p: IntPoly, k: int = 1) -> None:
    for m, v in p.items():
        nv = acc.get(m, 0) + k * v
        if nv:
            acc[m] = nv
        else:
            acc.pop(m, None)


def _pmul(p: IntPoly, q: IntPoly) -> IntPoly:
    out: IntPoly = {}
    for (a, b, n), u in p.items():
        for (a2, b2, n2), v in q.items():
            m = (a + a2, b + b2, n + n2)
            nv = out.get(m, 0) + u * v
            if nv:
                out[m] = nv
            else:
                out.pop(m, None)
    return out


def _swap(p: IntPoly) -> IntPoly:
    return {(b, a, n): v for (a, b, n), v in p.items()}


_ONE: IntPoly = {(0, 0, 0): 1}


def _casimir(strand: int, shift: int = 0) -> IntPoly:
    mono = (1, 0, 0) if strand == 1 else (0, 1, 0)
    out = {mono: 1}
    if shift:
        out[(0, 0, 0)] = shift
    return out


# --- structure of a share ---------------------------------------------------


def _positions(s1: Word, s2: Word) -> dict[int, list[tuple[int, int]]]:
    pos: dict[int, list[tuple[int, int]]] = {}
    for k, w in ((0, s1), (1, s2)):
        for i, a in enumerate(w):
            pos.setdefault(a, []).append((k, i))
    return pos


def _arches(s1: Word, s2: Word) -> list[tuple[int, int, int, int]]:
    """``(length, strand, lo, hi)`` for every arch."""
    out = []
    for k, w in ((0, s1), (1, s2)):
        first: dict[int, int] = {}
        for i, a in enumerate(w):
            if a in first:
                out.append((i - first[a] - 1, k, first[a], i))
            else:
                first[a] = i
    return out


def _crossings(s1: Word, s2: Word) -> int:
    where = {a: i for i, a in enumerate(s2)}
    seq = [where[a] for a in s1]
    return sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])


def complexity(s1: Word, s2: Word) -> tuple[int, int, int]:
    """Rank in the well-order of the normal-form construction (smaller is simpler)."""
    n = (len(s1) + len(s2)) // 2
    arches = _arches(s1, s2)
    if arches:
        return (n, 0, min(a[0] for a in arches))
    return (n, 1, _crossings(s1, s2))


def _fresh(s1: Word, s2: Word) -> int:
    return max(s1 + s2, default=0) + 1


def _replace_far(words: list[list[int]], label: int, skip: tuple[int, int], new: int) -> None:
    for k in (0, 1):
        for i, a in enumerate(words[k]):
            if a == label and (k, i) != skip:
                words[k][i] = new
                return
    raise AssertionError("far endpoint not found")


def _step_raw(s1: Word, s2: Word) -> list[tuple[IntPoly, Word, Word]] | None:
    """One rewriting step; ``None`` means the share is already normal."""
    arches = _arches(s1, s2)
    if arches:
        length, k, lo, hi = min(arches, key=lambda t: (t[0], t[1], t[2]))
        words = [list(s1), list(s2)]
        w = words[k]
        if length <= 1:
            del w[hi]
            del w[lo]
            coef = _casimir(k + 1, 0 if length == 0 else -1)
            return [(coef, tuple(words[0]), tuple(words[1]))]
        return _six_term(s1, s2, k, lo, hi)
    # arch-free: uncross the leftmost adjacent crossing pair on strand 1
    where = {a: i for i, a in enumerate(s2)}
    for i in range(len(s1) - 1):
        p, q = s1[i], s1[i + 1]
        if where[p] > where[q]:
            return _four_term(s1, s2, i, where[q])
    return None


def _four_term(s1: Word, s2: Word, i: int, jq: int) -> list[tuple[IntPoly, Word, Word]]:
    p, q = s1[i], s1[i + 1]
    swapped = s1[:i] + (q, p) + s1[i + 2:]
    rest1 = s1[:i] + s1[i + 1:]
    before = s2[:jq] + (p,) + s2[jq:]
    after = s2[: jq + 1] + (p,) + s2[jq + 1:]
    return [
        (_ONE, swapped, s2),
        ({(0, 0, 0): -1}, rest1, before),
        (_ONE, rest1, after),
    ]


def _six_term(s1: Word, s2: Word, k: int, lo: int, hi: int) -> list[tuple[IntPoly, Word, Word]]:
    words = (s1, s2)
    w = words[k]
    p = w[lo]
    length = hi - lo - 1
    interior = w[lo + 1: hi]
    qL = interior[-1]

    def pack(new_w: list[int]) -> tuple[Word, Word]:
        return (tuple(new_w), s2) if k == 0 else (s1, tuple(new_w))

    terms: list[tuple[IntPoly, Word, Word]] = []
    # W': right end of p moved left past QL
    moved = list(w[:hi - 1]) + [p, qL] + list(w[hi + 1:])
    terms.append((_ONE, *pack(moved)))
    # D: p deleted
    reduced = list(w[:lo]) + list(interior) + list(w[hi + 1:])
    terms.append(({(0, 0, 0): -1}, *pack(reduced)))
    posL = lo + length - 1
    base1, base2 = pack(reduced)
    fresh = _fresh(s1, s2)
    for j in range(length - 1):
        posj = lo + j
        qj = reduced[posj]
        # S_j: exchange the endpoints of qj and qL
        sw = list(reduced)
        sw[posj], sw[posL] = sw[posL], sw[posj]
        terms.append(({(0, 0, 0): -1}, *pack(sw)))
        # R_j: new arch on (posj, posL), far ends of qj and qL joined
        rw = [list(base1), list(base2)]
        arch_label, far_label = fresh, fresh + 1
        rw[k][posj] = arch_label
        rw[k][posL] = arch_label
        _replace_far(rw, qj, (k, posj), far_label)
        _replace_far(rw, qL, (k, posL), far_label)
        terms.append((_ONE, tuple(rw[0]), tuple(rw[1])))
    return terms


# --- the engine -------------------------------------------------------------


class Engine:
    """Memoising normal-form evaluator.

    The cache is a plain dict keyed by canonical share form; concurrent
    writers may race, but every stored value is complete when stored.
    """

    def __init__(self, check_order: bool = True):
        self.cache: dict[Key, IntPoly] = {}
        self.check_order = check_order
        self._lock = threading.Lock()

    def _nf(self, s1: Word, s2: Word) -> IntPoly:
        key, swapped = canonical_key(s1, s2)
        hit = self.cache.get(key)
        if hit is None:
            hit = self._compute(*key)
            self.cache[key] = hit
        return _swap(hit) if swapped else hit

    def _compute(self, s1: Word, s2: Word) -> IntPoly:
        if not s1 and not s2:
            return dict(_ONE)
        step = _step_raw(s1, s2)
        if step is None:
            return {(0, 0, len(s1)): 1}
        if self.check_order:
            rank = complexity(s1, s2)
            for _, t1, t2 in step:
                if not complexity(t1, t2) < rank:
                    raise AssertionError(f"rewrite did not simplify {s1}|{s2} -> {t1}|{t2}")
        out: IntPoly = {}
        for coef, t1, t2 in step:
            _padd(out, _pmul(coef, self._nf(t1, t2)))
        return out

    def normal_form(self, s: Share) -> PolyC1C2X:
        if sys.getrecursionlimit() < 20000:
            sys.setrecursionlimit(20000)
        return PolyC1C2X(self._nf(s.strand1, s.strand2))

    def wsl2_diagram(self, d: ChordDiagram) -> PolyC:
        return self.normal_form(d.as_share()).only_c1()

    def wsl2_share_S(self, s: Share) -> PolyCY:
        return self.normal_form(s).identify_casimirs()

    def combination_normal_form(self, combo: Iterable[tuple[Fraction | int, Share]]) -> PolyC1C2X:
        out = PolyC1C2X()
        for q, s in combo:
            out = out + self.normal_form(s) * Fraction(q)
        return out

    # --- on-disk cache ---------------------------------------------------
    def save(self, path: str | Path) -> None:
        with self._lock, open(path, "w") as fh:
            fh.write(json.dumps({"format": CACHE_FORMAT}) + "\n")
            for (s1, s2), poly in sorted(self.cache.items()):
                rec = {"s1": list(s1), "s2": list(s2), "nf": [[*m, v] for m, v in sorted(poly.items())]}
                fh.write(json.dumps(rec) + "\n")

    def load(self, path: str | Path) -> int:
        path = Path(path)
        if not path.exists():
            return 0
        with open(path) as fh:
            header = json.loads(fh.readline() or "{}")
            if header.get("format") != CACHE_FORMAT:
                return 0
            count = 0
            for line in fh:
                rec = json.loads(line)
                key = (tuple(rec["s1"]), tuple(rec["s2"]))
                self.cache[key] = {(a, b, n): v for a, b, n, v in rec["nf"]}
                count += 1
        return count


def rewrite_step(s: Share) -> list[tuple[PolyC1C2X, Share]]:
    """Expose one rule application as a list of ``(coefficient, share)`` terms."""
    step = _step_raw(s.strand1, s.strand2)
    if step is None:
        return []
    rank = complexity(s.strand1, s.strand2)
    out = []
    for coef, t1, t2 in step:
        assert complexity(t1, t2) < rank
        out.append((PolyC1C2X(coef), Share(t1, t2)))
    return out


default_engine = Engine()


def normal_form(s: Share) -> PolyC1C2X:
    return default_engine.normal_form(s)


def wsl2_diagram(d: ChordDiagram) -> PolyC:
    return default_engine.wsl2_diagram(d)


def wsl2_share_S(s: Share) -> PolyCY:
    """Value in ``S``: the normal form with ``c1 = c2 = c``, as a polynomial in x."""
    return default_engine.wsl2_share_S(s)


def crossing_share_in_x(m: int) -> PolyCY:
    """``y^m`` written in the ``x`` basis, computed by the rewrite engine."""
    return wsl2_share_S(crossing_share(m))
