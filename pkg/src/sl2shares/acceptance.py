"""Desk-scale acceptance suite.

Thirteen exact checks, each with a wall-clock budget.  Used by the test suite
and by the ``sweep`` command.
"""

from __future__ import annotations

import random
import time
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import diagrams as dg
from . import genfun, graphs, share_space as ss
from .exactalg import C, ONE, PolyC
from .rewrite import Engine
from .sl2rep import oracle_wsl2_diagram


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    seconds: float
    budget: float
    detail: str

    @property
    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d}. {self.name} ({self.seconds:.2f}s of {self.budget:.0f}s) {self.detail}"

    @property
    def stable_line(self) -> str:
        """``line`` without the timing, for reproducible output."""
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d}. {self.name}: {self.detail}"

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "number": self.number,
            "name": self.name,
            "passed": self.passed,
            "budget_seconds": self.budget,
            "detail": self.detail,
        }
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out


def _c(*coeffs) -> PolyC:
    """Polynomial from ascending coefficients."""
    return PolyC(Fraction(a) for a in coeffs)


def _is_tree(g: dg.SimpleGraph) -> bool:
    if len(g.edges) != g.n - 1:
        return False
    adj = g.adjacency()
    seen, stack = {0}, [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


# --- criteria ------------------------------------------------------------------


def base_values(eng: Engine) -> tuple[bool, str]:
    empty = eng.wsl2_diagram(dg.ChordDiagram(()))
    one = eng.wsl2_diagram(dg.parse_diagram("1 1"))
    return empty == ONE and one == C, f"empty={empty}, one chord={one}"


def tree_formula(eng: Engine) -> tuple[bool, str]:
    count, bad = 0, 0
    for n in range(1, 7):
        target = C * (C - 1) ** (n - 1)
        for d in dg.enumerate_diagrams(n):
            if _is_tree(dg.intersection_graph(d)):
                count += 1
                bad += eng.wsl2_diagram(d) != target
    return bad == 0 and count > 0, f"{count} tree diagrams, {bad} mismatches"


def oracle_equivalence(eng: Engine) -> tuple[bool, str]:
    raw = sum(1 for n in range(6) for _ in dg.raw_pairings(n))
    count, bad = 0, 0
    for n in range(6):
        for d in dg.enumerate_diagrams(n):
            count += 1
            bad += eng.wsl2_diagram(d) != oracle_wsl2_diagram(d, budget=5)
    return bad == 0 and raw >= 900, f"{count} canonical diagrams ({raw} raw pairings), {bad} mismatches"


def graph_invariance(eng: Engine) -> tuple[bool, str]:
    classes: dict = defaultdict(set)
    count = 0
    for n in range(7):
        for d in dg.enumerate_diagrams(n):
            count += 1
            classes[graphs.canonical_form(dg.intersection_graph(d))].add(eng.wsl2_diagram(d))
    bad = sum(1 for vals in classes.values() if len(vals) > 1)
    return bad == 0, f"{count} diagrams in {len(classes)} graph classes, {bad} classes with two values"


def four_term_vanishing(eng: Engine, trials: int = 200, seed: int = 2024) -> tuple[bool, str]:
    rng = random.Random(seed)
    bad = 0
    for _ in range(trials):
        n = rng.randint(2, 5)
        s = dg.random_share(rng, n)
        a, b = rng.sample(range(1, n + 1), 2)
        bad += bool(eng.combination_normal_form(dg.four_term(s, a, rng.randint(0, 1), b)))
    return bad == 0, f"{trials} combinations, {bad} nonzero"


def _identity_failures(basis: str, size: int) -> list[str]:
    fails = []
    for m in range(size):
        v = ss.SElem.basis_vector(basis, m)

        def w(ops):
            return ss.apply_word(ops, v)

        if w("X") - w("Y") != w("U") - v.scale(C):
            fails.append(f"X-Y=U-c at {basis}{m}")
        a, b, c = w("UX") - w("XU"), w("XY") - w("YX"), w("UY") - w("YU")
        if not (a == b == c):
            fails.append(f"commutators at {basis}{m}")
        rhs = (
            w("YUY").scale(2) - w("UY") + w("U").scale(2 * C) - w("YU") - w("YYU")
            - w("YY") + w("Y").scale(2 * C) - v.scale(C * C)
        )
        if w("UYY") != rhs:
            fails.append(f"UY^2 relation at {basis}{m}")
    return fails


def operator_identities(eng: Engine, size: int = 8) -> tuple[bool, str]:
    fails = []
    for basis in ("Y", "P", "E"):
        fails += _identity_failures(basis, size)
    return not fails, f"N={size} in Y, P, E bases" + (f"; failures: {fails}" if fails else "")


def eigen_data(eng: Engine) -> tuple[bool, str]:
    fails = []
    for m in range(13):
        um = C - Fraction(m * (m + 1), 2)
        if ss.u_column(m)[m] != um:
            fails.append(f"u_{m} diagonal")
        e = ss.SElem.basis_vector("E", m)
        if ss.apply_op("U", e) != e.scale(um):
            fails.append(f"U e_{m}")
    for n in range(9):
        if ss.gram_pairing(ss.e_poly(n), ss.one()) != ss.e_at_c(n):
            fails.append(f"e_{n}(c)")
        if ss.gram_pairing(ss.p_poly(n), ss.p_poly(n)) != ss.p_norm(n):
            fails.append(f"<p_{n},p_{n}>")
    return not fails, "u_m for m<=12, e_n(c) and <p_n,p_n> for n<=8" + (f"; failures: {fails}" if fails else "")


def orthogonality(eng: Engine, size: int = 8) -> tuple[bool, str]:
    fails = []
    for i in range(size + 1):
        for j in range(size + 1):
            if i != j and ss.gram_pairing(ss.p_poly(i), ss.p_poly(j)):
                fails.append(f"<p_{i},p_{j}>")
    gram = ss.gram_matrix(size + 2)
    for i in range(size):
        for j in range(size):
            vi, vj = ss.SElem.basis_vector("Y", i), ss.SElem.basis_vector("Y", j)
            if gram[i][j] != gram[j][i]:
                fails.append(f"symmetry {i},{j}")
            if ss.gram_pairing(ss.apply_op("Y", vi), vj) != ss.gram_pairing(vi, ss.apply_op("U", vj)):
                fails.append(f"Y/U adjoint {i},{j}")
            if ss.gram_pairing(ss.apply_op("X", vi), vj) != ss.gram_pairing(vi, ss.apply_op("X", vj)):
                fails.append(f"X self-adjoint {i},{j}")
            if ss.pairing(vi, vj) != gram[i][j]:
                fails.append(f"eigen route {i},{j}")
            if i + j <= 6:
                direct = eng.wsl2_diagram(dg.join(dg.crossing_share(i), dg.crossing_share(j)))
                if direct != gram[i][j]:
                    fails.append(f"diagram route {i},{j}")
    return not fails, f"p_i orthogonal for i,j<={size}; Gram identities N={size}" + (
        f"; failures: {fails[:5]}" if fails else ""
    )


# c/30 * (5c, 6(3c^2-2c+2), 10(4c-3), 3(4c^2-11c+6))
K3N_EXPECTED = {
    k: C * Fraction(1, 30) * f
    for k, f in {
        0: _c(0, 5),
        1: _c(2, -2, 3) * 6,
        2: _c(-3, 4) * 10,
        3: _c(6, -11, 4) * 3,
    }.items()
}

BULL_EXPECTED = {
    1: _c(0, 8, 22, -13, -60, 30) * Fraction(1, 70),
    3: _c(0, -108, 108, 123, -115, 20) * Fraction(1, 45),
    5: _c(0, 540, -1224, 813, -200, 16) * Fraction(1, 126),
}


def k3n_reproduction(eng: Engine) -> tuple[bool, str]:
    expected = genfun.RSeries(K3N_EXPECTED)
    split = genfun.RSeries({k: r if k % 2 else -r for k, r in K3N_EXPECTED.items()})
    a = graphs.graph_rseries(graphs.discrete(3), eng)
    b = graphs.graph_rseries(graphs.complete(3), eng)
    return a == expected and b == split, f"discrete_3 {'ok' if a == expected else 'differs'}, K_3 {'ok' if b == split else 'differs'}"


def duality(eng: Engine) -> tuple[bool, str]:
    count, bad = 0, []
    for n in range(1, 7):
        for g in graphs.permutation_graphs(n):
            count += 1
            if not graphs.verify_duality(g, eng).passed:
                bad.append(g.to_text())
    r = graphs.graph_rseries(graphs.bull(), eng)
    bull_ok = r == genfun.RSeries(BULL_EXPECTED) and all(k % 2 for k in r.terms)
    return not bad and bull_ok, f"{count} permutation graphs, {len(bad)} failures; bull {'ok' if bull_ok else 'differs'}"


def complete_graph_formula(eng: Engine) -> tuple[bool, str]:
    bad = [m for m in range(7) if genfun.k_complete(m) != eng.wsl2_diagram(dg.complete_diagram(m))]
    return not bad, f"m<=6, mismatches at {bad}" if bad else "m<=6 all equal"


C5_SERIES_FACTORS = {
    1: _c(324, 576, -999, -540, 270),
    3: _c(756, -2646, 3234, -1610, 280),
    5: _c(2700, -6120, 4065, -1000, 80),
}
C5_EXPECTED_Y = (
    _c(0, 0, 5, 1),
    _c(6, 8, -14),
    _c(-26, -6, 5),
    _c(29),
    _c(-10),
    _c(1),
)


def c5_series() -> genfun.RSeries:
    common = C * Fraction(1, 630)
    return genfun.RSeries({k: common * f for k, f in C5_SERIES_FACTORS.items()})


def c5_reconstruction(eng: Engine) -> tuple[bool, str]:
    v = genfun.reconstruct_selem(c5_series())
    ok = v == ss.SElem("Y", C5_EXPECTED_Y)
    return ok, f"reconstructed {ss.to_y(v)}"


def realizability(eng: Engine) -> tuple[bool, str]:
    circ = {name: graphs.realize_circle(g) for name, g in graphs.obstructions().items()}
    c5 = graphs.cycle(5)
    perm_none = graphs.realize_permutation(c5) is None
    try:
        graphs.graph_rseries(c5, eng)
        raised = False
    except graphs.NotRealizable:
        raised = True
    ok = all(d is None for d in circ.values()) and perm_none and raised
    found = [k for k, d in circ.items() if d is not None]
    return ok, f"circle realizations found for {found or 'none'}; C5 permutation-realizable: {not perm_none}; NotRealizable raised: {raised}"


CRITERIA: list[tuple[int, str, float, Callable[[Engine], tuple[bool, str]]]] = [
    (1, "base values", 1, base_values),
    (2, "tree formula", 10, tree_formula),
    (3, "oracle equivalence", 300, oracle_equivalence),
    (4, "intersection graph invariance", 600, graph_invariance),
    (5, "four-term vanishing", 120, four_term_vanishing),
    (6, "operator identities", 30, operator_identities),
    (7, "eigen data", 60, eigen_data),
    (8, "orthogonality and adjointness", 60, orthogonality),
    (9, "K_{3,n} reproduction", 30, k3n_reproduction),
    (10, "duality theorem", 900, duality),
    (11, "complete graph formula", 120, complete_graph_formula),
    (12, "C5 reconstruction", 5, c5_reconstruction),
    (13, "realizability", 120, realizability),
]


def run_criterion(number: int, eng: Engine | None = None) -> CriterionResult:
    eng = eng or Engine()
    num, name, budget, fn = CRITERIA[number - 1]
    t0 = time.perf_counter()
    try:
        ok, detail = fn(eng)
    except Exception as exc:  # a crash is a failure, reported with its message
        ok, detail = False, f"raised {type(exc).__name__}: {exc}"
    dt = time.perf_counter() - t0
    if dt > budget:
        ok, detail = False, detail + "; over time budget"
    return CriterionResult(num, name, ok, dt, budget, detail)


def run_all(eng: Engine | None = None, only: list[int] | None = None) -> list[CriterionResult]:
    eng = eng or Engine()
    nums = only or [c[0] for c in CRITERIA]
    return [run_criterion(n, eng) for n in nums]
