"""The algebra S of shares: bases, chord-adding operators, pairing, involution.

S is a free ``C[c]``-module.  Elements are stored as coefficient vectors in
one of four bases:

``X``  powers of the parallel share, ``x^n`` (dot product);
``Y``  powers of the crossing share, ``y^n`` (cross product);
``P``  the orthogonal basis ``p_n = prod_{m<n} (y - u_m)``;
``E``  the eigenbasis of ``U``, given by a three-term recurrence.

The ``Y`` basis is the hub: every conversion passes through it.  The
``X <-> Y`` transition is read off from the rewrite engine, never typed in.

Operators are built from three primitive sources only: the ``U(y^m)``
generating function, the three-term forms of ``X`` and ``Y`` on ``p_n``, and
the ``e_n`` recurrence.  Everything else is conjugation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exactalg import C, ONE, ZERO, PolyC, PolyCY, u_generating_series
from . import rewrite

BASES = ("X", "Y", "P", "E")
OPS = ("U", "X", "Y")


@dataclass(frozen=True)
class SElem:
    basis: str
    coeffs: tuple

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        cs = [PolyC.lift(a) for a in self.coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def basis_vector(cls, basis: str, n: int) -> "SElem":
        return cls(basis, (ZERO,) * n + (ONE,))

    @property
    def degree(self) -> float:
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def coeff(self, i: int) -> PolyC:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def __add__(self, other: "SElem") -> "SElem":
        other = basis_convert(other, self.basis)
        n = max(len(self.coeffs), len(other.coeffs))
        return SElem(self.basis, tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    def __neg__(self) -> "SElem":
        return SElem(self.basis, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "SElem") -> "SElem":
        return self + (-other)

    def scale(self, a) -> "SElem":
        a = PolyC.lift(a)
        return SElem(self.basis, tuple(a * b for b in self.coeffs))

    def in_filtration(self, m: int) -> bool:
        """Membership in ``S_m`` (spanned by ``y^k``, ``k <= m``)."""
        return to_y(self).degree <= m

    def in_grading(self, m: int) -> bool:
        """Membership in the ``u_m`` eigenline of ``U``."""
        e = basis_convert(self, "E")
        return all(not a for i, a in enumerate(e.coeffs) if i != m)

    def to_json(self) -> dict:
        return {"basis": self.basis, "coeffs": [a.to_json() for a in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> "SElem":
        return cls(obj["basis"], tuple(PolyC.from_json(a) for a in obj["coeffs"]))

    def __str__(self) -> str:
        name = {"X": "x^", "Y": "y^", "P": "p_", "E": "e_"}[self.basis]
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[i]
            if a:
                parts.append(f"({a})*{name}{i}")
        return " + ".join(parts)


# --- eigenvalues and the U generating function -------------------------------


def eigenvalue(m: int) -> PolyC:
    """``u_m = c - m(m+1)/2``."""
    return C - Fraction(m * (m + 1), 2)


def eigen_gap(j: int, m: int) -> Fraction:
    """``u_j - u_m``, a rational constant."""
    return Fraction(m * (m + 1) - j * (j + 1), 2)


_u_series: list[PolyCY] = []


def u_column(m: int) -> list[PolyC]:
    """Coefficients ``u_{0,m} .. u_{m,m}`` of ``U(y^m)`` in the y basis."""
    global _u_series
    if m < 0:
        raise ValueError("m must be nonnegative")
    if len(_u_series) <= m:
        _u_series = u_generating_series(max(m, 2 * len(_u_series), 12))
    col = _u_series[m]
    return [col.coeff(i) for i in range(m + 1)]


# --- distinguished bases, all as polynomials in y -----------------------------


@lru_cache(maxsize=None)
def _p(n: int) -> PolyCY:
    if n == 0:
        return PolyCY.monomial(0)
    return _p(n - 1) * PolyCY([-eigenvalue(n - 1), ONE])


def _e_coefficient(n: int) -> PolyC:
    """``n^2/(4n^2-1) * (c - (n^2-1)/4)^2``."""
    if n == 0:
        return ZERO
    return (C - Fraction(n * n - 1, 4)) ** 2 * Fraction(n * n, 4 * n * n - 1)


@lru_cache(maxsize=None)
def _e(n: int) -> PolyCY:
    if n == 0:
        return PolyCY.monomial(0)
    if n == 1:
        return PolyCY.monomial(1)
    k = n - 1
    lin = PolyCY([PolyC.const(-Fraction(k * (k + 1), 4)), ONE])
    return lin * _e(k) - _e(k - 1).scale(_e_coefficient(k))


@lru_cache(maxsize=None)
def _x_in_y_cols(m: int) -> tuple[PolyCY, ...]:
    """``x^0 .. x^m`` written in the y basis.

    The engine gives ``y^k`` in the x basis (unitriangular); inverting it
    column by column yields the x powers.
    """
    if m == 0:
        return (PolyCY.monomial(0),)
    prev = _x_in_y_cols(m - 1)
    ym = rewrite.crossing_share_in_x(m)  # y^m = x^m + sum_{i<m} t_i x^i
    if ym.coeff(m) != ONE:
        raise ArithmeticError("crossing share is not monic in x")
    acc = PolyCY.monomial(m)
    for i in range(m):
        t = ym.coeff(i)
        if t:
            acc = acc - prev[i].scale(t)
    return prev + (acc,)


def x_power_in_y(m: int) -> PolyCY:
    return _x_in_y_cols(m)[m]


def y_power_in_x(m: int) -> PolyCY:
    return rewrite.crossing_share_in_x(m)


def p_poly(n: int) -> SElem:
    return SElem("Y", _p(n).coeffs)


def e_poly(n: int) -> SElem:
    return SElem("Y", _e(n).coeffs)


def e_at_c(n: int) -> PolyC:
    """Closed form ``n!/(2n-1)!! * prod_{m=1..n} (c - (m^2-1)/4)``."""
    out = PolyC.const(Fraction(math.factorial(n), _double_factorial(2 * n - 1)))
    for m in range(1, n + 1):
        out = out * (C - Fraction(m * m - 1, 4))
    return out


def p_norm(n: int) -> PolyC:
    """Closed form ``(-1)^n (n!)^2 prod_{m=1..n} (c - (m^2-1)/4)``."""
    out = PolyC.const((-1) ** n * math.factorial(n) ** 2)
    for m in range(1, n + 1):
        out = out * (C - Fraction(m * m - 1, 4))
    return out


def _double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


# --- basis conversion ---------------------------------------------------------


def _basis_poly(basis: str, n: int) -> PolyCY:
    if basis == "Y":
        return PolyCY.monomial(n)
    if basis == "P":
        return _p(n)
    if basis == "E":
        return _e(n)
    if basis == "X":
        return x_power_in_y(n)
    raise ValueError(basis)


def to_y(v: SElem) -> PolyCY:
    if v.basis == "Y":
        return PolyCY(v.coeffs)
    acc = PolyCY(())
    for n, a in enumerate(v.coeffs):
        if a:
            acc = acc + _basis_poly(v.basis, n).scale(a)
    return acc


def from_y(poly: PolyCY, basis: str) -> SElem:
    """Triangular solve against a monic basis of polynomials in y."""
    if basis == "Y":
        return SElem("Y", poly.coeffs)
    if basis == "X":
        acc = PolyCY((), "x")
        for m, a in enumerate(poly.coeffs):
            if a:
                acc = acc + y_power_in_x(m).scale(a)
        return SElem("X", acc.coeffs)
    rest = poly
    out = [ZERO] * len(poly.coeffs)
    for n in range(len(poly.coeffs) - 1, -1, -1):
        a = rest.coeff(n)
        if a:
            out[n] = a
            rest = rest - _basis_poly(basis, n).scale(a)
    assert rest.is_zero()
    return SElem(basis, tuple(out))


def basis_convert(v: SElem, target: str) -> SElem:
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if v.basis == target:
        return v
    return from_y(to_y(v), target)


def from_polynomial(poly: PolyCY, basis: str) -> SElem:
    """Read a polynomial in the basis variable: ``y`` for Y, ``x`` for X."""
    if basis not in ("X", "Y"):
        raise ValueError("only the X and Y bases are polynomial in a variable")
    return SElem(basis, poly.coeffs)


def one() -> SElem:
    return SElem("Y", (ONE,))


# --- operators -------------------------------------------------------------


def _apply_U_y(poly: PolyCY) -> PolyCY:
    acc = PolyCY(())
    for m, a in enumerate(poly.coeffs):
        if a:
            acc = acc + PolyCY(u_column(m)).scale(a)
    return acc


def _apply_p(op: str, v: SElem) -> SElem:
    """``X`` and ``Y`` from their three-term forms on ``p_n``."""
    out: dict[int, PolyC] = {}

    def add(i, a):
        out[i] = out.get(i, ZERO) + a

    for n, a in enumerate(v.coeffs):
        if not a:
            continue
        add(n + 1, a)
        if op == "Y":
            add(n, a * eigenvalue(n))
        else:
            add(n, a * (C - n * (n + 1)))
            if n:
                add(n - 1, a * (C - Fraction(n * n - 1, 4)) * (-n * n))
    top = max(out) if out else -1
    return SElem("P", tuple(out.get(i, ZERO) for i in range(top + 1)))


@lru_cache(maxsize=None)
def _image(op: str, basis: str, n: int) -> SElem:
    v = SElem.basis_vector(basis, n)
    if op == "U":
        return basis_convert(SElem("Y", _apply_U_y(to_y(v)).coeffs), basis)
    return basis_convert(_apply_p(op, basis_convert(v, "P")), basis)


def apply_op(op: str, v: SElem) -> SElem:
    """Apply ``U``, ``X`` or ``Y`` to an element; the result is in ``v``'s basis."""
    if op not in OPS:
        raise ValueError(f"unknown operator {op!r}")
    out: list[PolyC] = []
    for n, a in enumerate(v.coeffs):
        if not a:
            continue
        img = _image(op, v.basis, n).coeffs
        out.extend([ZERO] * (len(img) - len(out)))
        for i, b in enumerate(img):
            out[i] = out[i] + a * b
    return SElem(v.basis, tuple(out))


def apply_word(ops: str, v: SElem) -> SElem:
    """Apply a product of operators, rightmost first (``"UY"`` means U(Y(v)))."""
    for op in reversed(ops):
        v = apply_op(op, v)
    return v


@dataclass(frozen=True)
class OperatorMatrix:
    op: str
    basis: str
    size: int
    columns: tuple  # columns[m][i] = coefficient of basis element i in op(basis_m)

    def entry(self, i: int, m: int) -> PolyC:
        return self.columns[m][i]

    def rows(self) -> list[list[PolyC]]:
        return [[self.columns[m][i] for m in range(self.size)] for i in range(self.size)]

    def to_json(self) -> dict:
        return {
            "op": self.op,
            "basis": self.basis,
            "size": self.size,
            "columns": [[a.to_json() for a in col] for col in self.columns],
        }


def operator_matrix(op: str, basis: str, size: int) -> OperatorMatrix:
    """Top-left ``size x size`` block of the operator in a basis.

    ``X`` and ``Y`` raise the degree by one, so the last column loses its top
    entry; compare full images with :func:`apply_op` when that matters.
    """
    if size < 1:
        raise ValueError("size must be positive")
    cols = []
    for m in range(size):
        img = apply_op(op, SElem.basis_vector(basis, m))
        cols.append(tuple(img.coeff(i) for i in range(size)))
    return OperatorMatrix(op, basis, size, tuple(cols))


# --- bilinear form ------------------------------------------------------------


def pairing(a: SElem, b: SElem) -> PolyC:
    """``<a, b> = sum_n b_n a(u_n) e_n(c)`` with ``b = sum b_n e_n``."""
    ay = to_y(a)
    be = basis_convert(b, "E")
    acc = ZERO
    for n, bn in enumerate(be.coeffs):
        if bn:
            acc = acc + bn * ay(eigenvalue(n)) * e_at_c(n)
    return acc


def counit(v: SElem) -> PolyC:
    """``<v, 1>``: close the share with nothing; ``y^i`` gives ``c^i``."""
    return to_y(v)(C)


def gram_pairing(a: SElem, b: SElem) -> PolyC:
    """The same form computed as ``sum_n b_n <U^n a, 1>`` (b in the y basis).

    Uses only the ``U`` matrix and ``<y^i, 1> = c^i``; no eigenbasis data.
    """
    by = to_y(b)
    cur = to_y(a)
    acc = ZERO
    for n, bn in enumerate(by.coeffs):
        if n:
            cur = _apply_U_y(cur)
        if bn:
            acc = acc + bn * cur(C)
    return acc


def gram_matrix(size: int) -> list[list[PolyC]]:
    """``G[i][j] = <y^i, y^j>`` via :func:`gram_pairing`."""
    out = []
    for i in range(size):
        cur = PolyCY.monomial(i)
        row = []
        for j in range(size):
            if j:
                cur = _apply_U_y(cur)
            row.append(cur(C))
        out.append(row)
    return out


# --- involution -------------------------------------------------------------


def sigma(v: SElem) -> SElem:
    """``sigma(x^m) = (-1)^m y^m`` and ``sigma(y^m) = (-1)^m x^m``, in v's basis."""
    if v.basis == "X":
        out = SElem("Y", tuple(a if m % 2 == 0 else -a for m, a in enumerate(v.coeffs)))
        return basis_convert(out, "X")
    vy = basis_convert(v, "Y")
    out = SElem("X", tuple(a if m % 2 == 0 else -a for m, a in enumerate(vy.coeffs)))
    return basis_convert(out, v.basis)


def share_element(s) -> SElem:
    """Image of a share in S, in the x basis."""
    return SElem("X", rewrite.wsl2_share_S(s).coeffs)
