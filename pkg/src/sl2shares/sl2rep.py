"""Independent oracle: evaluate the sl2 weight system in irreducible representations.

Each chord is the Casimir tensor written with the dual pairs ``(e, f/2)``,
``(f, e/2)``, ``(h, h/4)`` for the form ``<u, v> = 2 tr(uv)``.  A diagram is
evaluated in ``V_k`` (dimension ``k + 1``) by multiplying the matrices along
the word; the result is a scalar matrix, and the scalars at
``c = k(k+2)/4`` for ``k = 1 .. n+1`` are interpolated into a polynomial.

To stay in integer arithmetic every chord is scaled by 4 (weights 2, 2, 1) and
the final value divided by ``4**n``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .diagrams import BudgetExceeded, ChordDiagram, Share
from .exactalg import PolyC, PolyC1C2X

DEFAULT_MAX_CHORDS = 6


class OracleError(RuntimeError):
    """The representation-theoretic evaluation produced something impossible."""


def casimir_value(k: int) -> Fraction:
    return Fraction(k * (k + 2), 4)


@dataclass(frozen=True)
class IrrepTriple:
    k: int
    mat_e: np.ndarray
    mat_f: np.ndarray
    mat_h: np.ndarray

    @property
    def dim(self) -> int:
        return self.k + 1

    def check_brackets(self) -> bool:
        e, f, h = self.mat_e, self.mat_f, self.mat_h
        return (
            np.array_equal(e.dot(f) - f.dot(e), h)
            and np.array_equal(h.dot(e) - e.dot(h), 2 * e)
            and np.array_equal(h.dot(f) - f.dot(h), -2 * f)
        )

    def casimir(self) -> np.ndarray:
        """``ef/2 + fe/2 + h^2/4`` as an exact matrix."""
        e, f, h = self.mat_e, self.mat_f, self.mat_h
        return (2 * (e.dot(f) + f.dot(e)) + h.dot(h)) * Fraction(1, 4)


def irrep(k: int) -> IrrepTriple:
    """Integer matrices of e, f, h on ``V_k`` in the weight basis ``v_0 .. v_k``."""
    d = k + 1
    e = np.zeros((d, d), dtype=object)
    f = np.zeros((d, d), dtype=object)
    h = np.zeros((d, d), dtype=object)
    for j in range(d):
        h[j, j] = k - 2 * j
        if j + 1 < d:
            f[j + 1, j] = j + 1
        if j >= 1:
            e[j - 1, j] = k - j + 1
    return IrrepTriple(k, e, f, h)


# (first end, second end, weight after scaling the chord by 4)
_PAIRS = ((0, 1, 2), (1, 0, 2), (2, 2, 1))


def _identity(d: int) -> np.ndarray:
    m = np.zeros((d, d), dtype=object)
    for i in range(d):
        m[i, i] = 1
    return m


def _lifted(reps: Sequence[IrrepTriple]) -> list[list[np.ndarray]]:
    """e, f, h acting on each tensor factor of ``V_k1 (x) V_k2 ...``."""
    dims = [r.dim for r in reps]
    out = []
    for idx, r in enumerate(reps):
        mats = []
        for m in (r.mat_e, r.mat_f, r.mat_h):
            acc = np.ones((1, 1), dtype=object)
            for j, d in enumerate(dims):
                acc = np.kron(acc, m if j == idx else _identity(d))
            mats.append(acc)
        out.append(mats)
    return out


def evaluate_strands(strands: Sequence[Sequence[int]], ks: Sequence[int]) -> np.ndarray:
    """``4**n`` times the image of a multi-strand diagram on ``V_k1 (x) V_k2 ...``.

    Sums over the dual-pair assignments by dynamic programming over the word,
    keeping one partial product per assignment of the currently open chords.
    """
    reps = [irrep(k) for k in ks]
    lifted = _lifted(reps)
    dim = int(np.prod([r.dim for r in reps]))
    word = [(a, s) for s, strand in enumerate(strands) for a in strand]
    states: dict[tuple, np.ndarray] = {(): _identity(dim)}
    opened: set[int] = set()
    for label, s in word:
        mats = lifted[s]
        new: dict[tuple, np.ndarray] = {}
        if label not in opened:
            opened.add(label)
            for key, m in states.items():
                for t, (first, _, _) in enumerate(_PAIRS):
                    new[key + ((label, t),)] = m.dot(mats[first])
        else:
            for key, m in states.items():
                t = next(tt for lab, tt in key if lab == label)
                _, second, weight = _PAIRS[t]
                rest = tuple(item for item in key if item[0] != label)
                val = m.dot(mats[second]) * weight
                if rest in new:
                    new[rest] = new[rest] + val
                else:
                    new[rest] = val
        states = new
    if list(states) != [()]:
        raise OracleError("unbalanced word")
    return states[()]


def _scalar(m: np.ndarray) -> int:
    d = m.shape[0]
    v = m[0, 0]
    for i in range(d):
        for j in range(d):
            if m[i, j] != (v if i == j else 0):
                raise OracleError("image of a closed diagram is not central")
    return v


def interpolate(points: Sequence[tuple[Fraction, Fraction]]) -> PolyC:
    """Exact Lagrange interpolation through ``(node, value)`` pairs."""
    out = PolyC()
    for i, (xi, yi) in enumerate(points):
        basis = PolyC.const(1)
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j != i:
                basis = basis * PolyC((-xj, 1))
                denom *= xi - xj
        out = out + basis * (Fraction(yi) / denom)
    return out


def oracle_wsl2_diagram(d: ChordDiagram, budget: int = DEFAULT_MAX_CHORDS, ks: Iterable[int] | None = None) -> PolyC:
    n = d.n
    if n > budget:
        raise BudgetExceeded(f"{n} chords exceeds the oracle budget of {budget}")
    ks = list(ks) if ks is not None else list(range(1, n + 2))
    if len(ks) < n + 1:
        raise ValueError("need at least n+1 representations to interpolate")
    scale = Fraction(1, 4 ** n)
    pts = [(casimir_value(k), _scalar(evaluate_strands([d.word], [k])) * scale) for k in ks]
    return interpolate(pts)


def _ostrand_matrix(k1: int, k2: int) -> np.ndarray:
    r1, r2 = irrep(k1), irrep(k2)
    m = 2 * (np.kron(r1.mat_e, r2.mat_f) + np.kron(r1.mat_f, r2.mat_e)) + np.kron(r1.mat_h, r2.mat_h)
    return m * Fraction(1, 4)


def bridge_matrix(k1: int, k2: int) -> np.ndarray:
    """The element ``x`` acting on ``V_k1 (x) V_k2``."""
    return _ostrand_matrix(k1, k2)


def nf_matrix(nf: PolyC1C2X, k1: int, k2: int) -> np.ndarray:
    x = bridge_matrix(k1, k2)
    dim = x.shape[0]
    c1, c2 = casimir_value(k1), casimir_value(k2)
    out = np.zeros((dim, dim), dtype=object)
    powers = [_identity(dim)]
    for (a, b, n), q in nf.terms.items():
        while len(powers) <= n:
            powers.append(powers[-1].dot(x))
        out = out + powers[n] * (q * c1 ** a * c2 ** b)
    return out


def oracle_check_nf(
    s: Share, nf: PolyC1C2X, reps: Iterable[tuple[int, int]], budget: int = DEFAULT_MAX_CHORDS
) -> bool:
    if s.n > budget:
        raise BudgetExceeded(f"{s.n} chords exceeds the oracle budget of {budget}")
    scale = Fraction(1, 4 ** s.n)
    for k1, k2 in reps:
        val = evaluate_strands([s.strand1, s.strand2], [k1, k2]) * scale
        if not np.array_equal(val, nf_matrix(nf, k1, k2)):
            return False
    return True


def _rank(rows: list[list[Fraction]]) -> int:
    rows = [list(r) for r in rows]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][col]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col] / p
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def spectral_points(k1: int, k2: int) -> list[tuple[Fraction, Fraction, Fraction]]:
    """``(c1, c2, x)`` eigenvalue triples seen on ``V_k1 (x) V_k2``.

    On the summand ``V_j`` the bridge acts as ``(c(j) - c(k1) - c(k2)) / 2``.
    """
    c1, c2 = casimir_value(k1), casimir_value(k2)
    return [(c1, c2, (casimir_value(j) - c1 - c2) / 2) for j in range(abs(k1 - k2), k1 + k2 + 1, 2)]


def _monomials(bounds: tuple[int, int, int], total: int | None) -> list[tuple[int, int, int]]:
    A, B, N = bounds
    monos = itertools.product(range(A + 1), range(B + 1), range(N + 1))
    return [m for m in monos if total is None or sum(m) <= total]


def reps_separate(
    reps: Iterable[tuple[int, int]], bounds: tuple[int, int, int], total: int | None = None
) -> bool:
    """True iff evaluation on ``reps`` determines every polynomial within ``bounds``.

    ``total`` optionally caps the total degree as well.
    """
    monos = _monomials(bounds, total)
    rows = []
    for k1, k2 in reps:
        for c1, c2, x in spectral_points(k1, k2):
            rows.append([c1 ** a * c2 ** b * x ** n for a, b, n in monos])
    return _rank(rows) == len(monos)


@lru_cache(maxsize=None)
def separating_reps(bounds: tuple[int, int, int], total: int | None = None) -> list[tuple[int, int]]:
    """All pairs ``k1, k2 <= K`` for the least K whose pairs separate the monomials."""
    A, B, N = bounds
    K = 1
    while True:
        reps = [(k1, k2) for k1 in range(1, K + 1) for k2 in range(1, K + 1)]
        if reps_separate(reps, bounds, total):
            return reps
        K += 1


def verify_normal_form(s: Share, nf: PolyC1C2X, budget: int = DEFAULT_MAX_CHORDS) -> bool:
    """:func:`oracle_check_nf` on a representation set that provably separates ``nf``.

    Both the true value and ``nf`` must have total degree at most the chord
    count; a candidate of higher degree is rejected outright.
    """
    n = s.n
    if any(sum(m) > n for m in nf.terms):
        return False
    reps = separating_reps((n, n, n), total=n)
    return oracle_check_nf(s, nf, reps, budget)
