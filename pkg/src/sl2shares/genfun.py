"""Residue form of join-sequence generating functions.

For an element ``v`` of S the sequence ``<v, y^n>`` has generating function
``sum_k r_k / (1 - u_k t)``.  An :class:`RSeries` stores the residues ``r_k``;
the rational function itself is never built.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .exactalg import C, ONE, ZERO, PolyC
from .share_space import (
    SElem,
    basis_convert,
    e_at_c,
    e_poly,
    eigen_gap,
    eigenvalue,
    u_column,
)


@dataclass(frozen=True)
class RSeries:
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {int(k): PolyC.lift(r) for k, r in self.terms.items() if r}
        if any(k < 0 for k in clean):
            raise ValueError("residue index must be nonnegative")
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    def __getitem__(self, k: int) -> PolyC:
        return self.terms.get(k, ZERO)

    def __eq__(self, other) -> bool:
        return isinstance(other, RSeries) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __add__(self, other: "RSeries") -> "RSeries":
        keys = set(self.terms) | set(other.terms)
        return RSeries({k: self[k] + other[k] for k in keys})

    def scale(self, a) -> "RSeries":
        a = PolyC.lift(a)
        return RSeries({k: a * r for k, r in self.terms.items()})

    @property
    def max_k(self) -> int:
        return max(self.terms, default=-1)

    def value(self, n: int) -> PolyC:
        """``sum_k r_k u_k^n``: the n-th term of the sequence."""
        acc = ZERO
        for k, r in self.terms.items():
            acc = acc + r * eigenvalue(k) ** n
        return acc

    def to_json(self) -> dict:
        return {"terms": [{"k": k, "r": r.to_json()} for k, r in self.terms.items()]}

    @classmethod
    def from_json(cls, obj) -> "RSeries":
        return cls({int(t["k"]): PolyC.from_json(t["r"]) for t in obj["terms"]})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return "\n".join(f"r_{k} = {r}" for k, r in self.terms.items())


def gen_series(v: SElem) -> RSeries:
    e = basis_convert(v, "E")
    return RSeries({k: a * e_at_c(k) for k, a in enumerate(e.coeffs)})


def series_values(v: SElem, n: int) -> PolyC:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return gen_series(v).value(n)


def dual_rseries(r: RSeries, vcount: int) -> RSeries:
    if vcount < r.max_k:
        raise ValueError("vertex count is smaller than the largest residue index")
    return RSeries({k: p if (vcount - k) % 2 == 0 else -p for k, p in r.terms.items()})


def _unroll(m: int, sign: int, prev, start: PolyC) -> RSeries:
    """Residues of ``F_m = (F_m(0) + t * sum_i s_i u_{i,m} F_i) / (1 - u_m t)``.

    ``s_i = sign**(m-i)``.  Each ``F_i`` is ``sum_j r_j/(1 - u_j t)``; the
    product ``t/((1-u_j t)(1-u_m t))`` splits as
    ``(1/(u_j - u_m)) (1/(1-u_j t) - 1/(1-u_m t))``.
    """
    col = u_column(m)
    out: dict[int, PolyC] = {m: start}
    for i in range(m):
        w = col[i]
        if not w:
            continue
        if sign < 0 and (m - i) % 2:
            w = -w
        for j, r in prev(i).terms.items():
            term = w * r * (1 / eigen_gap(j, m))
            out[j] = out.get(j, ZERO) + term
            out[m] = out[m] - term
    return RSeries(out)


@lru_cache(maxsize=None)
def cb_series(m: int) -> RSeries:
    """Join sequence of the discrete graph on m vertices (complete bipartite)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return _unroll(m, 1, cb_series, C ** m)


@lru_cache(maxsize=None)
def split_series(m: int) -> RSeries:
    """Join sequence of the complete graph on m vertices (split graphs)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return _unroll(m, -1, split_series, k_complete(m))


@lru_cache(maxsize=None)
def k_complete(m: int) -> PolyC:
    """Value on the complete graph ``K_m`` from the bipartite residues.

    ``c^m - 2 sum_{i<m} sum_{j<=i, m-j odd} u_{i,m} r_i^(j) / (u_j - u_m)``.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    col = u_column(m)
    acc = ZERO
    for i in range(m):
        if not col[i]:
            continue
        for j, r in cb_series(i).terms.items():
            if j <= i and (m - j) % 2 == 1:
                acc = acc + col[i] * r * (1 / eigen_gap(j, m))
    return C ** m - acc * 2


class NotJoinSeries(ValueError):
    """A residue is not divisible by ``e_k(c)``."""


def reconstruct_selem(r: RSeries) -> SElem:
    acc = SElem("Y", ())
    for k, rk in r.terms.items():
        try:
            a = rk.exact_div(e_at_c(k))
        except ArithmeticError as exc:
            raise NotJoinSeries(f"r_{k} is not divisible by e_{k}(c)") from exc
        acc = acc + e_poly(k).scale(a)
    return acc
