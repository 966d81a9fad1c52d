"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 bad input, 3 a budget was
exceeded.  Output is JSON (default) or plain text and is deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, fields
from pathlib import Path

from . import acceptance, genfun, graphs
from . import share_space as ss
from .diagrams import (
    BudgetExceeded,
    DiagramError,
    SimpleGraph,
    enumerate_diagrams,
    parse_diagram,
    parse_graph,
    parse_share,
    raw_pairings,
)
from .exactalg import parse_poly
from .rewrite import Engine
from .sl2rep import oracle_wsl2_diagram

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


@dataclass
class Config:
    max_chords_oracle: int = 5
    max_vertices: int = 8
    cache_path: str | None = None
    output: str = "json"

    def __post_init__(self):
        if self.max_chords_oracle < 1 or self.max_vertices < 1:
            raise ValueError("budgets must be positive")
        if self.output not in ("json", "text"):
            raise ValueError("output must be 'json' or 'text'")

    @classmethod
    def load(cls, path: str | None) -> "Config":
        if path is None:
            return cls()
        data = json.loads(Path(path).read_text())
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)


class VerificationFailed(Exception):
    """A result that is printed but ends with a nonzero exit status."""

    def __init__(self, payload, text, code=1):
        super().__init__("verification failed")
        self.payload, self.text, self.code = payload, text, code


BASIS_NAMES = {"x": "X", "y": "Y", "p": "P", "e": "E"}


def _graph(text: str, cfg: Config) -> SimpleGraph:
    text = text.strip()
    g = SimpleGraph.from_json(json.loads(text)) if text.startswith("{") else parse_graph(text)
    if g.n > cfg.max_vertices:
        raise BudgetExceeded(f"{g.n} vertices exceeds max_vertices={cfg.max_vertices}")
    return g


def _selem(text: str, basis: str) -> ss.SElem:
    """Element of S from text; ``p^k`` / ``e^k`` name the k-th basis vector."""
    text = text.strip()
    if text.startswith("{"):
        v = ss.SElem.from_json(json.loads(text))
        if v.basis != basis:
            raise ValueError(f"JSON element is in basis {v.basis}, expected {basis}")
        return v
    poly = parse_poly(text, basis.lower())
    return ss.SElem(basis, poly.coeffs)


def _json_or_path(text: str):
    text = text.strip()
    if text.startswith("{"):
        return json.loads(text)
    return json.loads(Path(text).read_text())


# --- command handlers: each returns (payload, text) ------------------------------


def cmd_eval_cd(a, eng, cfg):
    v = eng.wsl2_diagram(parse_diagram(a.word))
    return v.to_json(), str(v)


def cmd_eval_share(a, eng, cfg):
    v = eng.wsl2_share_S(parse_share(a.share))
    return v.to_json(), str(v)


def cmd_normal_form(a, eng, cfg):
    v = eng.normal_form(parse_share(a.share))
    return v.to_json(), str(v)


def cmd_basis_convert(a, eng, cfg):
    src, dst = BASIS_NAMES[a.src], BASIS_NAMES[a.dst]
    v = ss.basis_convert(_selem(a.poly, src), dst)
    return v.to_json(), str(v)


def cmd_op_matrix(a, eng, cfg):
    m = ss.operator_matrix(a.op.upper(), BASIS_NAMES[a.basis.lower()], a.size)
    text = "\n".join(" | ".join(str(e) for e in row) for row in m.rows())
    return m.to_json(), text


def cmd_rseries(a, eng, cfg):
    s = parse_share(a.share)
    r = genfun.gen_series(ss.SElem("X", eng.wsl2_share_S(s).coeffs))
    return r.to_json(), str(r)


def cmd_reconstruct(a, eng, cfg):
    v = genfun.reconstruct_selem(genfun.RSeries.from_json(_json_or_path(a.rseries)))
    return v.to_json(), str(ss.to_y(v))


def cmd_kbipartite(a, eng, cfg):
    r = genfun.cb_series(a.m)
    return r.to_json(), str(r)


def cmd_ksplit(a, eng, cfg):
    r = genfun.split_series(a.m)
    return r.to_json(), str(r)


def cmd_kcomplete(a, eng, cfg):
    v = genfun.k_complete(a.m)
    return v.to_json(), str(v)


def cmd_graph_r(a, eng, cfg):
    r = graphs.graph_rseries(_graph(a.graph, cfg), eng)
    return r.to_json(), str(r)


def cmd_verify_duality(a, eng, cfg):
    rep = graphs.verify_duality(_graph(a.graph, cfg), eng)
    lines = [f"k={r.k} {'ok' if r.ok else 'FAIL'}: r={r.r_graph} ; complement r={r.r_complement}" for r in rep.rows]
    lines.append("PASS" if rep.passed else "FAIL")
    payload, text = rep.to_json(), "\n".join(lines)
    if not rep.passed:
        raise VerificationFailed(payload, text)
    return payload, text


def cmd_realize(a, eng, cfg):
    g = _graph(a.graph, cfg)
    perm = graphs.realize_permutation(g)
    circ = graphs.realize_circle(g) if g.n <= graphs.MAX_CIRCLE_VERTICES else None
    payload = {
        "permutation_share": None if perm is None else str(perm),
        "circle_diagram": None if circ is None else str(circ),
    }
    text = f"share: {payload['permutation_share']}\ndiagram: {payload['circle_diagram']}"
    return payload, text


def cmd_bouchet(a, eng, cfg):
    rep = graphs.bouchet_scan(_graph(a.graph, cfg), a.budget)
    payload = rep.to_json()
    text = f"induced: {rep.induced}\nsubgraph: {rep.subgraph}\norbit members examined: {rep.orbit_size}"
    if graphs.INCONCLUSIVE in (rep.induced, rep.subgraph):
        raise VerificationFailed(payload, text, EXIT_BUDGET)
    return payload, text


def cmd_enumerate(a, eng, cfg):
    if a.graphs:
        if a.n > cfg.max_vertices:
            raise BudgetExceeded(f"{a.n} vertices exceeds max_vertices={cfg.max_vertices}")
        gs = graphs.permutation_graphs(a.n)
        return [g.to_json() for g in gs], "\n".join(g.to_text() for g in gs)
    rows = [(d, eng.wsl2_diagram(d)) for d in enumerate_diagrams(a.n)]
    items = [{"diagram": str(d), "value": v.to_json()} for d, v in rows]
    return items, "\n".join(f"{d}: {v}" for d, v in rows)


def cmd_oracle_check(a, eng, cfg):
    limit = a.max_chords if a.max_chords is not None else cfg.max_chords_oracle
    if limit > cfg.max_chords_oracle:
        raise BudgetExceeded(f"{limit} chords exceeds max_chords_oracle={cfg.max_chords_oracle}")
    checked, raw = 0, 0
    for n in range(limit + 1):
        raw += sum(1 for _ in raw_pairings(n))
        for d in enumerate_diagrams(n):
            checked += 1
            mine, ref = eng.wsl2_diagram(d), oracle_wsl2_diagram(d, budget=limit)
            if mine != ref:
                payload = {"passed": False, "diagram": str(d), "engine": mine.to_json(), "oracle": ref.to_json()}
                raise VerificationFailed(payload, f"mismatch on {d}: engine {mine}, oracle {ref}")
    payload = {"passed": True, "max_chords": limit, "canonical_diagrams": checked, "raw_pairings": raw}
    return payload, f"{checked} canonical diagrams ({raw} raw pairings) agree up to {limit} chords"


def cmd_sweep(a, eng, cfg):
    results = acceptance.run_all(eng, a.only or None)
    payload = {"passed": all(r.passed for r in results), "criteria": [r.to_json() for r in results]}
    text = "\n".join(r.stable_line for r in results)
    if not payload["passed"]:
        raise VerificationFailed(payload, text)
    return payload, text


# --- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sl2shares", description="sl2 weight system on chord diagrams and shares")
    p.add_argument("--config", help="JSON config file")
    p.add_argument("--output", choices=("json", "text"), help="override the configured output format")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=fn)
        return sp

    add("eval-cd", cmd_eval_cd, "weight of a chord diagram").add_argument("word")
    add("eval-share", cmd_eval_share, "image of a share in S, in the x basis").add_argument("share")
    add("normal-form", cmd_normal_form, "normal form in c1, c2, x").add_argument("share")
    sp = add("basis-convert", cmd_basis_convert, "convert an element of S between bases")
    sp.add_argument("--from", dest="src", choices=sorted(BASIS_NAMES), required=True)
    sp.add_argument("--to", dest="dst", choices=sorted(BASIS_NAMES), required=True)
    sp.add_argument("poly")
    sp = add("op-matrix", cmd_op_matrix, "truncated matrix of U, X or Y")
    sp.add_argument("op", choices=("U", "X", "Y", "u", "x", "y"))
    sp.add_argument("basis", choices=sorted(BASIS_NAMES) + sorted(BASIS_NAMES.values()))
    sp.add_argument("size", type=int)
    add("rseries", cmd_rseries, "residues of the join sequence of a share").add_argument("share")
    add("reconstruct", cmd_reconstruct, "element of S from residues (JSON text or file)").add_argument("rseries")
    add("kbipartite", cmd_kbipartite, "residues for K_{m,n}").add_argument("m", type=int)
    add("ksplit", cmd_ksplit, "residues for (K_m, n)").add_argument("m", type=int)
    add("kcomplete", cmd_kcomplete, "value on the complete graph K_m").add_argument("m", type=int)
    add("graph-r", cmd_graph_r, "residues of the join sequence of a graph").add_argument("graph")
    add("verify-duality", cmd_verify_duality, "compare residues of a graph and its complement").add_argument("graph")
    add("realize", cmd_realize, "realize a graph by a share and by a chord diagram").add_argument("graph")
    sp = add("bouchet", cmd_bouchet, "search the local-equivalence orbit for obstructions")
    sp.add_argument("graph")
    sp.add_argument("--budget", type=int, default=1000)
    sp = add("enumerate", cmd_enumerate, "canonical chord diagrams with n chords and their values")
    sp.add_argument("n", type=int)
    sp.add_argument("--graphs", action="store_true", help="list permutation graphs on n vertices instead")
    sp = add("oracle-check", cmd_oracle_check, "cross-check the engine against representation matrices")
    sp.add_argument("--max-chords", type=int)
    sp = add("sweep", cmd_sweep, "run the acceptance suite")
    sp.add_argument("--only", type=int, nargs="*", help="criterion numbers")
    return p


def _emit(payload, text, cfg: Config, stream) -> None:
    if cfg.output == "json":
        stream.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        stream.write(text + "\n")


def run(argv: list[str], stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        cfg = Config.load(args.config)
        if args.output:
            cfg.output = args.output
    except (OSError, ValueError, TypeError) as exc:
        stderr.write(f"config error: {exc}\n")
        return EXIT_INPUT
    eng = Engine()
    if cfg.cache_path:
        eng.load(cfg.cache_path)
    code = EXIT_OK
    try:
        payload, text = args.func(args, eng, cfg)
        _emit(payload, text, cfg, stdout)
    except VerificationFailed as exc:
        _emit(exc.payload, exc.text, cfg, stdout)
        code = exc.code
    except BudgetExceeded as exc:
        stderr.write(f"budget exceeded: {exc}\n")
        code = EXIT_BUDGET
    except graphs.NotRealizable as exc:
        stderr.write(f"not realizable: {exc}\n")
        code = EXIT_INPUT
    except (DiagramError, ValueError, KeyError, OSError, json.JSONDecodeError, ArithmeticError) as exc:
        stderr.write(f"input error: {exc}\n")
        code = EXIT_INPUT
    if cfg.cache_path:
        eng.save(cfg.cache_path)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
