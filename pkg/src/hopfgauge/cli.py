"""Command line front end: ``hopfgauge <command> [options]``.

Each command prints a RunReport body (key-sorted, scalars as num/den) to stdout
and the wall time to stderr, so stdout is byte-stable for fixed inputs.
Exit codes: 0 all identities pass, 1 an identity failed, 2 usage, 3 input, 4 module error.
"""
from __future__ import annotations

import argparse
import hashlib
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from .hopf import Report

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT, EXIT_MODULE = 0, 1, 2, 3, 4


class UsageError(ValueError):
    pass


@dataclass
class RunReport:
    command: str
    inputs: Dict[str, str] = field(default_factory=dict)
    results: Dict[str, object] = field(default_factory=dict)
    checks: Dict[str, bool] = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    @property
    def digest(self) -> str:
        h = hashlib.sha256()
        for k in sorted(self.inputs):
            h.update(f"{k}\0{self.inputs[k]}\0".encode())
        return h.hexdigest()[:16]

    def add_report(self, rep: Report, prefix: str = ""):
        for ident in rep.identities:
            self.checks[prefix + ident.name] = ident.passed

    def body(self) -> str:
        lines = [f"command: {self.command}", f"inputs: {self.digest}"]
        for k in sorted(self.results):
            lines.append(f"result.{k}: {render(self.results[k])}")
        for k in sorted(self.checks):
            lines.append(f"check.{k}: {'pass' if self.checks[k] else 'FAIL'}")
        lines.append(f"status: {'pass' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"


def render(x) -> str:
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, dict):
        items = sorted(x.items(), key=lambda kv: repr(kv[0]))
        return "{" + ", ".join(f"{_key(k)}: {render(v)}" for k, v in items) + "}"
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(render(v) for v in x) + "]"
    return str(x)


def _key(k) -> str:
    if isinstance(k, tuple):
        return ".".join(str(i) for i in k) or "()"
    return str(k)


# --- inputs ------------------------------------------------------------------------

def _read(name: str, inputs: Dict[str, str], tag: str) -> str:
    from .io import data_path
    try:
        text = data_path(name).read_text()
    except FileNotFoundError:
        raise UsageError(f"no such file: {name}") from None
    inputs[tag] = text
    return text


def _algebra(args, inputs):
    """(K, R-matrix data, group) for the --group/--double/--algebra options."""
    from .hopf import drinfeld_double, function_algebra, group_algebra, trivial_qt
    from .io import parse_group
    name = args.double or args.group
    if not name:
        raise UsageError("--group or --double is required")
    G = parse_group(_read(name, inputs, "group"))
    kind = "double" if args.double else args.algebra
    inputs["algebra"] = kind
    if kind == "double":
        K, qt = drinfeld_double(group_algebra(G))
        return K, qt, G
    K = group_algebra(G) if kind == "group" else function_algebra(G)
    return K, trivial_qt(K), G


def _graph(args, inputs):
    from .io import parse_graph
    if not args.graph:
        raise UsageError("--graph is required")
    return parse_graph(_read(args.graph, inputs, "graph"))


def _function_algebra(args, inputs):
    from .gauge import build_function_algebra
    K, qt, G = _algebra(args, inputs)
    g = _graph(args, inputs)
    inputs["rho"] = args.rho
    return build_function_algebra(g, K, qt, rho=args.rho), G


# --- commands -------------------------------------------------------------------------

def cmd_check_hopf(args, rr: RunReport):
    from .hopf import verify_hopf_axioms
    K, _, _ = _algebra(args, rr.inputs)
    rr.results["dim"] = K.dim
    rr.add_report(verify_hopf_axioms(K))


def cmd_check_qt(args, rr: RunReport):
    from .hopf import is_factorisable, verify_quasitriangular, verify_r_properties
    K, qt, _ = _algebra(args, rr.inputs)
    rr.results["dim"] = K.dim
    rr.add_report(verify_quasitriangular(K, qt))
    rr.add_report(verify_r_properties(K, qt))
    rr.results["factorisable"] = is_factorisable(K, qt)


def cmd_check_twist(args, rr: RunReport):
    from .gauge import verify_twist_duality, vertex_algebra
    from .hopf import verify_twist
    K, qt, _ = _algebra(args, rr.inputs)
    n = args.n
    rr.inputs["n"] = str(n)
    rr.add_report(verify_twist(K, qt, n))
    if args.duality:
        for sigma in _flags(n):
            va = vertex_algebra(K, qt, (0,) * n, sigma)
            rr.add_report(verify_twist_duality(va), prefix="sigma=" + "".join(map(str, sigma)) + ".")


def _flags(n: int) -> List[tuple]:
    from itertools import product
    return list(product((0, 1), repeat=n))


def cmd_build_algebra(args, rr: RunReport):
    from .gauge import module_algebra_report, well_formedness_report
    fa, _ = _function_algebra(args, rr.inputs)
    rr.results["dim"] = fa.dim
    rr.results["edges"] = list(fa.edges)
    rr.add_report(well_formedness_report(fa))
    if args.module:
        rr.add_report(module_algebra_report(fa))
    if args.constants:
        rr.results["structure_constants"] = {
            (x, y): v for (x, y), v in fa.structure_constants().items() if v}


def cmd_invariant_dim(args, rr: RunReport):
    fa, _ = _function_algebra(args, rr.inputs)
    rr.results["invariant_dim"] = len(fa.invariant_basis())


def cmd_moduli_dim(args, rr: RunReport):
    from .holonomy import moduli_algebra
    fa, _ = _function_algebra(args, rr.inputs)
    m = moduli_algebra(fa)
    rr.results["moduli_dim"] = m.dim
    rr.results["assumption_violations"] = m.assumption_violations
    rr.add_report(m.report)


def cmd_verify_move(args, rr: RunReport):
    from .graph import apply_move
    from .movemaps import contraction_report, homomorphism_report, move_map
    K, qt, _ = _algebra(args, rr.inputs)
    g = _graph(args, rr.inputs)
    rr.inputs["move"] = args.spec
    res = apply_move(g, args.spec)
    mm = move_map(res, K, qt, rho=args.rho)
    rr.results["source_dim"] = mm.source.dim
    rr.results["target_dim"] = mm.target.dim
    rr.add_report(homomorphism_report(mm))
    if res.kind.startswith("contract"):
        rep = contraction_report(mm)
        rr.results["invariant_dims"] = [len(mm.target.invariant_basis()), len(mm.source.invariant_basis())]
        rr.add_report(rep)


def cmd_holonomy(args, rr: RunReport):
    from .graph import parse_word
    from .holonomy import holonomy
    fa, _ = _function_algebra(args, rr.inputs)
    p = parse_word(fa.graph, args.word)
    rr.inputs["word"] = str(p)
    hp = holonomy(fa, p)
    rr.results["word"] = str(p)
    rr.results["columns"] = {a: hp.cols[a] for a in range(fa.d)}


def cmd_oracle_compare(args, rr: RunReport):
    from .io import parse_group
    from .oracle import compare_with_hopf, flat_moduli_dim, invariant_dim
    name = args.group
    if not name:
        raise UsageError("--group is required")
    G = parse_group(_read(name, rr.inputs, "group"))
    g = _graph(args, rr.inputs)
    rr.results["oracle_invariant_dim"] = invariant_dim(G, g)
    if not args.no_moduli:
        rr.results["oracle_flat_moduli_dim"] = flat_moduli_dim(G, g)
    rr.add_report(compare_with_hopf(G, g, moduli=not args.no_moduli))


COMMANDS = {
    "check-hopf": cmd_check_hopf,
    "check-qt": cmd_check_qt,
    "check-twist": cmd_check_twist,
    "build-algebra": cmd_build_algebra,
    "invariant-dim": cmd_invariant_dim,
    "moduli-dim": cmd_moduli_dim,
    "verify-move": cmd_verify_move,
    "holonomy": cmd_holonomy,
    "oracle-compare": cmd_oracle_compare,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hopfgauge")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, graph=False, rho=False):
        p = sub.add_parser(name)
        p.add_argument("--group", help="group table file (or shipped name such as s3.group)")
        p.add_argument("--double", help="group table file; use the Drinfel'd double of its group algebra")
        p.add_argument("--algebra", choices=("group", "function", "double"), default="group")
        if graph:
            p.add_argument("--graph", help="graph file (or shipped name such as torus.graph)")
        if rho:
            p.add_argument("--rho", choices=("s", "t"), default="t")
        return p

    add("check-hopf")
    add("check-qt")
    p = add("check-twist")
    p.add_argument("n", type=int, choices=(1, 2, 3))
    p.add_argument("--duality", action="store_true", help="also compare incoming vertex algebras with the twisted coproduct")
    p = add("build-algebra", graph=True, rho=True)
    p.add_argument("--module", action="store_true", help="also check the module-algebra law")
    p.add_argument("--constants", action="store_true", help="emit the structure constants")
    add("invariant-dim", graph=True, rho=True)
    add("moduli-dim", graph=True, rho=True)
    p = add("verify-move", graph=True, rho=True)
    p.add_argument("spec", help="move such as contract-target:e1, delete:a, double:a, add-loop:v,0, detach:a,b")
    p = add("holonomy", graph=True, rho=True)
    p.add_argument("word", help="path in composition order, e.g. 'b^-1*a'")
    p = add("oracle-compare", graph=True)
    p.add_argument("--no-moduli", action="store_true")
    return parser


def error_code(exc: BaseException) -> str:
    return "E_" + "".join("_" + c if c.isupper() else c for c in type(exc).__name__).lstrip("_").upper()


def run(command: str, argv: List[str]) -> RunReport:
    args = build_parser().parse_args([command, *argv])
    rr = RunReport(command)
    t0 = time.perf_counter()
    COMMANDS[command](args, rr)
    rr.wall_time = time.perf_counter() - t0
    return rr


def main(argv: Optional[List[str]] = None) -> int:
    from .graph import DanglingEnd, DuplicateEnd
    from .hopf import InvalidGroup
    from .io import ParseError
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        rr = run(args.command, argv[1:])
    except UsageError as exc:
        print(f"error: {error_code(exc)}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, InvalidGroup, DanglingEnd, DuplicateEnd) as exc:
        print(f"error: {error_code(exc)}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {error_code(exc)}: {exc}", file=sys.stderr)
        return EXIT_MODULE
    sys.stdout.write(rr.body())
    print(f"wall time: {rr.wall_time:.3f} s", file=sys.stderr)
    return EXIT_OK if rr.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
