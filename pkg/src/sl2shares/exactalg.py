"""Exact polynomial arithmetic over the rationals.

Three rings show up everywhere in this package:

* ``PolyC``      -- univariate polynomials in the Casimir ``c``;
* ``PolyCY``     -- polynomials in a second variable (``y`` or ``x``) whose
  coefficients are ``PolyC``;
* ``PolyC1C2X``  -- sparse polynomials in ``c1, c2, x`` (values of the weight
  system on two-strand diagrams before identifying ``c1 = c2``).

All values are immutable and canonical, so ``==`` is structural equality.
Scalars are :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Scalar = Union[int, Fraction]


def _q(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact scalar: {value!r}")


def fraction_to_json(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _trim(seq: list) -> tuple:
    while seq and not seq[-1]:
        seq.pop()
    return tuple(seq)


class PolyC:
    """Dense polynomial in ``c``; ``coeffs[i]`` is the coefficient of ``c**i``."""

    __slots__ = ("coeffs", "_hash")
    var = "c"

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim([_q(a) for a in coeffs])
        self._hash = None

    # constructors -----------------------------------------------------
    @classmethod
    def const(cls, a: Scalar) -> "PolyC":
        return cls((a,))

    @classmethod
    def c(cls) -> "PolyC":
        return cls((0, 1))

    @classmethod
    def lift(cls, a) -> "PolyC":
        return a if isinstance(a, PolyC) else cls.const(a)

    # basic queries ----------------------------------------------------
    @property
    def degree(self) -> float:
        """Degree, with ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_monic(self) -> bool:
        return self.lead() == 1

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PolyC.const(other)
        return isinstance(other, PolyC) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("PolyC", self.coeffs))
        return self._hash

    # ring operations --------------------------------------------------
    def __add__(self, other) -> "PolyC":
        other = PolyC.lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return PolyC(out)

    __radd__ = __add__

    def __neg__(self) -> "PolyC":
        return PolyC(-a for a in self.coeffs)

    def __sub__(self, other) -> "PolyC":
        return self + (-PolyC.lift(other))

    def __rsub__(self, other) -> "PolyC":
        return PolyC.lift(other) - self

    def __mul__(self, other) -> "PolyC":
        if isinstance(other, (int, Fraction)):
            return PolyC(a * other for a in self.coeffs)
        if not isinstance(other, PolyC):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return PolyC()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    out[i + j] += u * v
        return PolyC(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "PolyC":
        if n < 0:
            raise ValueError("negative power")
        out, base = PolyC.const(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other: "PolyC") -> tuple["PolyC", "PolyC"]:
        """Euclidean division over the rationals."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = len(other.coeffs) - 1
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - d, 0)
        for k in range(len(rem) - 1, d - 1, -1):
            q = rem[k] / lead
            if q:
                quot[k - d] = q
                for i, v in enumerate(other.coeffs):
                    rem[k - d + i] -= q * v
        return PolyC(quot), PolyC(rem[:d] if d else [])

    def exact_div(self, other: "PolyC") -> "PolyC":
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def __call__(self, value):
        """Evaluate at a scalar (or at a ``PolyC``, i.e. compose)."""
        acc = PolyC() if isinstance(value, PolyC) else Fraction(0)
        for a in reversed(self.coeffs):
            acc = acc * value + a
        return acc

    # display / serialisation -----------------------------------------
    def to_json(self) -> dict:
        return {"var": self.var, "coeffs": [fraction_to_json(a) for a in self.coeffs]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "PolyC":
        if obj.get("var", "c") != "c":
            raise ValueError("expected a polynomial in c")
        return cls(Fraction(s) for s in obj["coeffs"])

    def __str__(self) -> str:
        return _format_univariate(self.coeffs, "c")

    def __repr__(self) -> str:
        return f"PolyC({self})"


def _format_scalar_term(a: Fraction, mono: str, first: bool) -> str:
    sign = "-" if a < 0 else "+"
    mag = abs(a)
    if mono:
        body = mono if mag == 1 else f"{mag}*{mono}"
    else:
        body = str(mag)
    if first:
        return f"-{body}" if sign == "-" else body
    return f" {sign} {body}"


def _format_univariate(coeffs: Sequence[Fraction], var: str) -> str:
    if not coeffs:
        return "0"
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        a = coeffs[i]
        if not a:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        parts.append(_format_scalar_term(a, mono, not parts))
    return "".join(parts)


C = PolyC.c()
ONE = PolyC.const(1)
ZERO = PolyC()


class PolyCY:
    """Polynomial in a second variable with ``PolyC`` coefficients."""

    __slots__ = ("coeffs", "var", "_hash")

    def __init__(self, coeffs: Iterable = (), var: str = "y"):
        self.coeffs = _trim([PolyC.lift(a) for a in coeffs])
        self.var = var
        self._hash = None

    @classmethod
    def monomial(cls, n: int, coeff=1, var: str = "y") -> "PolyCY":
        return cls([ZERO] * n + [PolyC.lift(coeff)], var)

    @property
    def degree(self) -> float:
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, i: int) -> PolyC:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def _same(self, other: "PolyCY") -> None:
        if other.var != self.var:
            raise TypeError(f"ring mismatch: {self.var} vs {other.var}")

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyCY) and self.var == other.var and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("PolyCY", self.var, self.coeffs))
        return self._hash

    def __add__(self, other: "PolyCY") -> "PolyCY":
        self._same(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyCY((self.coeff(i) + other.coeff(i) for i in range(n)), self.var)

    def __neg__(self) -> "PolyCY":
        return PolyCY((-a for a in self.coeffs), self.var)

    def __sub__(self, other: "PolyCY") -> "PolyCY":
        return self + (-other)

    def scale(self, a) -> "PolyCY":
        a = PolyC.lift(a)
        return PolyCY((a * b for b in self.coeffs), self.var)

    def __mul__(self, other) -> "PolyCY":
        if isinstance(other, (int, Fraction, PolyC)):
            return self.scale(other)
        if not isinstance(other, PolyCY):
            return NotImplemented
        self._same(other)
        if not self.coeffs or not other.coeffs:
            return PolyCY((), self.var)
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, u in enumerate(self.coeffs):
            if u:
                for j, v in enumerate(other.coeffs):
                    if v:
                        out[i + j] = out[i + j] + u * v
        return PolyCY(out, self.var)

    __rmul__ = __mul__

    def __call__(self, value) -> PolyC:
        """Evaluate the second variable at a scalar or ``PolyC``."""
        value = PolyC.lift(value)
        acc = ZERO
        for a in reversed(self.coeffs):
            acc = acc * value + a
        return acc

    def shift(self, k: int) -> "PolyCY":
        """Multiply by ``var**k``."""
        if not self.coeffs:
            return self
        return PolyCY([ZERO] * k + list(self.coeffs), self.var)

    def to_json(self) -> dict:
        return {"var": self.var, "coeffs": [a.to_json() for a in self.coeffs]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "PolyCY":
        return cls((PolyC.from_json(a) for a in obj["coeffs"]), obj.get("var", "y"))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[i]
            if not a:
                continue
            mono = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            nonzero = [k for k, v in enumerate(a.coeffs) if v]
            if len(nonzero) == 1 and nonzero[0] == 0:
                parts.append(_format_scalar_term(a.coeffs[0], mono, not parts))
            else:
                body = f"({a})" if mono else f"({a})"
                body = f"{body}*{mono}" if mono else body
                parts.append(body if not parts else f" + {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"PolyCY[{self.var}]({self})"


Monomial = tuple  # (a, b, n) exponents of c1, c2, x


class PolyC1C2X:
    """Sparse polynomial in ``c1, c2, x``; ``terms[(a, b, n)]`` is a Fraction."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict = {}
        for mono, q in items:
            a, b, n = mono
            if min(a, b, n) < 0:
                raise ValueError(f"negative exponent in {mono}")
            q = _q(q)
            if q:
                key = (int(a), int(b), int(n))
                clean[key] = clean.get(key, Fraction(0)) + q
                if not clean[key]:
                    del clean[key]
        self.terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def monomial(cls, a: int = 0, b: int = 0, n: int = 0, q: Scalar = 1) -> "PolyC1C2X":
        return cls({(a, b, n): q})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyC1C2X) and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("PolyC1C2X", tuple(self.terms.items())))
        return self._hash

    def __add__(self, other: "PolyC1C2X") -> "PolyC1C2X":
        if not isinstance(other, PolyC1C2X):
            raise TypeError("ring mismatch: expected PolyC1C2X")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return PolyC1C2X(out)

    def __neg__(self) -> "PolyC1C2X":
        return PolyC1C2X({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "PolyC1C2X") -> "PolyC1C2X":
        return self + (-other)

    def __mul__(self, other) -> "PolyC1C2X":
        if isinstance(other, (int, Fraction)):
            return PolyC1C2X({k: v * other for k, v in self.terms.items()})
        if not isinstance(other, PolyC1C2X):
            return NotImplemented
        out: dict = {}
        for (a, b, n), u in self.terms.items():
            for (a2, b2, n2), v in other.terms.items():
                key = (a + a2, b + b2, n + n2)
                out[key] = out.get(key, Fraction(0)) + u * v
        return PolyC1C2X(out)

    __rmul__ = __mul__

    def degrees(self) -> tuple[int, int, int]:
        if not self.terms:
            return (0, 0, 0)
        return tuple(max(m[i] for m in self.terms) for i in range(3))  # type: ignore[return-value]

    def swap_strands(self) -> "PolyC1C2X":
        return PolyC1C2X({(b, a, n): v for (a, b, n), v in self.terms.items()})

    def evaluate(self, c1: Scalar, c2: Scalar, x: Scalar) -> Fraction:
        return sum(
            (q * _q(c1) ** a * _q(c2) ** b * _q(x) ** n for (a, b, n), q in self.terms.items()),
            Fraction(0),
        )

    def identify_casimirs(self) -> PolyCY:
        """Quotient map ``c1 = c2 = c``; the result is a polynomial in ``x``."""
        by_x: dict[int, list[Fraction]] = {}
        for (a, b, n), q in self.terms.items():
            row = by_x.setdefault(n, [])
            d = a + b
            if len(row) <= d:
                row.extend([Fraction(0)] * (d + 1 - len(row)))
            row[d] += q
        if not by_x:
            return PolyCY((), "x")
        top = max(by_x)
        return PolyCY([PolyC(by_x.get(i, ())) for i in range(top + 1)], "x")

    def only_c1(self) -> PolyC:
        """Read off a polynomial in ``c1`` alone (closed one-strand diagrams)."""
        out: list[Fraction] = []
        for (a, b, n), q in self.terms.items():
            if b or n:
                raise ValueError(f"not a polynomial in c1 alone: {self}")
            if len(out) <= a:
                out.extend([Fraction(0)] * (a + 1 - len(out)))
            out[a] += q
        return PolyC(out)

    def to_json(self) -> list:
        return [
            {"c1": a, "c2": b, "x": n, "q": fraction_to_json(q)}
            for (a, b, n), q in self.terms.items()
        ]

    @classmethod
    def from_json(cls, items: Sequence[Mapping]) -> "PolyC1C2X":
        return cls({(d["c1"], d["c2"], d["x"]): Fraction(d["q"]) for d in items})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b, n), q in sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), kv[0])):
            factors = []
            for name, e in (("c1", a), ("c2", b), ("x", n)):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            parts.append(_format_scalar_term(q, "*".join(factors), not parts))
        return "".join(parts)

    def __repr__(self) -> str:
        return f"PolyC1C2X({self})"


def substitute_casimirs(p: PolyC1C2X) -> PolyCY:
    return p.identify_casimirs()


# --- series ---------------------------------------------------------------


def expand_rational_series(
    numerator: Sequence[PolyCY], denominator: Sequence[PolyCY], order: int
) -> list[PolyCY]:
    """Coefficients of ``t**0 .. t**order`` of ``numerator / denominator``.

    Both arguments are lists of ``PolyCY`` indexed by the power of ``t``.  The
    constant term of the denominator must be a nonzero rational constant; the
    quotient is produced by the linear recurrence it induces.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    if not denominator or denominator[0].degree != 0 or denominator[0].coeffs[0].degree != 0:
        raise ZeroDivisionError("denominator must have an invertible constant term")
    var = denominator[0].var
    inv = 1 / denominator[0].coeffs[0].coeffs[0]
    zero = PolyCY((), var)
    out: list[PolyCY] = []
    for k in range(order + 1):
        acc = numerator[k] if k < len(numerator) else zero
        for j in range(1, min(k, len(denominator) - 1) + 1):
            if denominator[j]:
                acc = acc - denominator[j] * out[k - j]
        out.append(acc.scale(inv))
    return out


def u_generating_series(order: int) -> list[PolyCY]:
    """Expand ``sum_m U(y^m) t^m`` through ``t**order``.

    The closed form is ``(1/(1 - y t)) * (c + (c^2 t^2 - y t) / Q(t))`` with
    ``Q(t) = 1 - (2y - 1) t - (2c - y^2 - y) t^2``; it is expanded as a single
    fraction ``(c Q(t) + c^2 t^2 - y t) / ((1 - y t) Q(t))``.
    """
    y = PolyCY.monomial(1)
    one = PolyCY.monomial(0)
    cy = PolyCY([C])
    q0, q1, q2 = one, -(y * 2 - one), -(cy * 2 - y * y - y)
    num = [cy * q0, cy * q1 - y, cy * q2 + PolyCY([C * C])]
    lin = [one, -y]
    den = [PolyCY(()), PolyCY(()), PolyCY(()), PolyCY(())]
    for i, a in enumerate(lin):
        for j, b in enumerate((q0, q1, q2)):
            den[i + j] = den[i + j] + a * b
    return expand_rational_series(num, den, order)


# --- text input ---------------------------------------------------------------


def parse_poly(text: str, var: str = "y") -> PolyCY:
    """Parse an arithmetic expression in ``c`` and ``var`` into a ``PolyCY``.

    Accepts integers, ``+ - * /``, ``^`` or ``**`` with a nonnegative integer
    exponent, and parentheses; division only by rational constants.
    """
    import ast

    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse polynomial {text!r}") from exc
    one = PolyCY.monomial(0, var=var)

    def const_of(p: PolyCY) -> Fraction | None:
        if p.degree <= 0 and (not p.coeffs or p.coeffs[0].degree <= 0):
            return p.coeffs[0].coeffs[0] if p.coeffs and p.coeffs[0].coeffs else Fraction(0)
        return None

    def ev(node) -> PolyCY:
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return one.scale(node.value)
        if isinstance(node, ast.Name):
            if node.id == "c":
                return PolyCY([C], var)
            if node.id == var:
                return PolyCY.monomial(1, var=var)
            raise ValueError(f"unknown symbol {node.id!r} (expected c or {var})")
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                d = const_of(b)
                if not d:
                    raise ValueError("division only by nonzero rational constants")
                return a.scale(PolyC.const(1 / d))
            if isinstance(node.op, ast.Pow):
                e = const_of(b)
                if e is None or e.denominator != 1 or e < 0:
                    raise ValueError("exponents must be nonnegative integers")
                out = one
                for _ in range(int(e)):
                    out = out * a
                return out
        raise ValueError(f"unsupported syntax in {text!r}")

    return ev(tree)
