"""Generator products of 𝒜* read off from the case-by-case multiplication relations.

This is the second evaluation route: it never touches G* or the vertex algebras.
A pair of edges is first brought into one of the tabulated constellations by
reversing edges (the involution S on that leg, applied to inputs and outputs)
and, if needed, swapping the roles of the two edges.
"""
from __future__ import annotations

from itertools import product as cartesian
from typing import Dict, Optional, Tuple

from .exact import ONE, ZERO, Vec, vadd
from .gauge import FunctionAlgebra
from .graph import CiliatedRibbonGraph
from .hopf import Report, RMatrixMismatch

# A leg reference is (role, sweedler index, antipode flag); role "E" is the
# element sitting on edge e, "F" the one on edge f. Factors are <X (x) Y, R-kind>.
E1, E2, E3, E4, E5 = (("E", i, False) for i in range(1, 6))
F1, F2, F3, F4, F5 = (("F", i, False) for i in range(1, 6))


def _S(leg):
    return (leg[0], leg[1], True)


# case -> {"fe": (factors, output), "ef": (factors, output)}
PAIR_CASES = {
    "c": {"fe": ([], (E1, F1)), "ef": ([], (E1, F1))},
    "d": {"fe": ([(E1, F1, "R")], (E2, F2)), "ef": ([], (E1, F1))},
    "e": {"fe": ([(E1, _S(F3), "R"), (E2, F1, "R")], (E3, F2)), "ef": ([], (E1, F1))},
    "f": {"fe": ([(E1, _S(F2), "R")], (E2, F1)), "ef": ([(F1, E1, "R")], (E2, F2))},
    "g": {"fe": ([], (E1, F1)), "ef": ([(F1, E1, "R"), (_S(F3), E2, "R")], (E3, F2))},
    "h": {"fe": ([(E1, _S(F5), "R"), (E2, F1, "R"), (E5, F4, "R"), (E4, F2, "Rinv")], (E3, F3)),
          "ef": ([], (E1, F1))},
    "i": {"fe": ([(E1, _S(F4), "R"), (E2, F1, "R"), (E4, F3, "R")], (E3, F2)),
          "ef": ([(_S(E2), F1, "R21")], (E1, F2))},
    "j": {"fe": ([(E1, _S(F3), "R"), (E2, F1, "R")], (E3, F2)),
          "ef": ([(_S(E3), F1, "R21"), (E2, F3, "R21")], (E1, F2))},
    "k": {"fe": ([(E1, F1, "R"), (E3, F3, "R")], (E2, F2)), "ef": ([], (E1, F1))},
    "l": {"fe": ([(E1, F1, "R")], (E2, F2)), "ef": ([(E2, F2, "R21")], (E1, F1))},
}

# same edge, product X * Y: role "E" is X, "F" is Y
SAME_EDGE_CASES = {
    "a": ([(F1, E1, "R")], (F2, E2)),
    "b": ([(F1, _S(E3), "R"), (F2, E1, "R")], (F3, E2)),
}


def _reverse(g: CiliatedRibbonGraph, e: str) -> CiliatedRibbonGraph:
    """Same ciliated graph with edge e reversed (its two ends swap labels)."""
    edges = [(x, b, a) if x == e else (x, a, b) for x, a, b in g.edge_list()]
    swap = {("s", e): ("t", e), ("t", e): ("s", e)}
    order = {v: [swap.get(end, end) for end in ends] for v, ends in g.end_order.items()}
    return CiliatedRibbonGraph(g.vertices, edges, order)


def classify_pair(g: CiliatedRibbonGraph, e: str, f: str) -> Optional[str]:
    """Case letter if (e, f) is literally in a tabulated constellation, else None."""
    se, te, sf, tf = ("s", e), ("t", e), ("s", f), ("t", f)
    if not (set(g.edges[e]) & set(g.edges[f])):
        return "c"
    le, lf = g.is_loop(e), g.is_loop(f)
    lt = g.less
    if not le and not lf:
        if g.ta(e) == g.ta(f) and g.st(e) != g.st(f):
            # only the common target is shared
            return "d" if lt(te, tf) else None
        if g.ta(e) == g.ta(f) and g.st(e) == g.st(f):
            if not lt(te, tf):
                return None
            return "k" if lt(se, sf) else "l"
        return None
    if not le and lf:
        if g.ta(e) != g.st(f) or not lt(tf, sf):
            return None
        if lt(te, tf):
            return "e"
        if lt(te, sf):
            return "f"
        return "g"
    if le and lf:
        if not (lt(te, se) and lt(tf, sf) and lt(te, tf)):
            return None
        if lt(se, tf):
            return "h"
        return "i" if lt(se, sf) else "j"
    return None


def _reduce_pair(g: CiliatedRibbonGraph, e: str, f: str):
    """Find reversals and a role assignment putting (e, f) into a tabulated case.

    Returns (case, E-edge, F-edge, reversed edges)."""
    for rev in ((), (e,), (f,), (e, f)):
        h = g
        for x in rev:
            h = _reverse(h, x)
        for a, b in ((e, f), (f, e)):
            case = classify_pair(h, a, b)
            if case is not None:
                return case, a, b, rev
    raise ValueError(f"no tabulated constellation for edges {e}, {f}")


class ExplicitRelations:
    """Generator products (alpha)_x * (beta)_y from the tabulated relations."""

    def __init__(self, fa: FunctionAlgebra):
        if not fa.uniform_r:
            raise RMatrixMismatch("the explicit relations need a single global R-matrix")
        self.fa = fa
        self.Kd = fa.Kd
        self.R = fa.qt.r_matrix
        self.Rinv = fa.qt.r_inverse
        self._reductions: Dict[Tuple[str, str], tuple] = {}

    def reduction(self, e: str, f: str):
        key = (e, f)
        if key not in self._reductions:
            self._reductions[key] = _reduce_pair(self.fa.graph, e, f)
        return self._reductions[key]

    def _leg(self, ref, sw: Dict[str, Tuple]) -> Vec:
        role, i, anti = ref
        a = sw[role][i - 1]
        return self.Kd.S[a] if anti else {a: ONE}

    def _factor(self, x: Vec, y: Vec, kind: str):
        if kind == "R21":
            x, y, kind = y, x, "R"
        r = self.R if kind == "R" else self.Rinv
        return sum((cx * cy * r.get((a, b), ZERO) for a, cx in x.items() for b, cy in y.items()), ZERO)

    def _evaluate(self, factors, a: int, b: int, n_out_legs, emit):
        """Sum over Sweedler splittings of a (role E) and b (role F)."""
        Kd = self.Kd
        refs = [r for fac in factors for r in fac[:2]] + list(n_out_legs)
        nE = max([r[1] for r in refs if r[0] == "E"], default=1)
        nF = max([r[1] for r in refs if r[0] == "F"], default=1)
        for (pe, ce), (pf, cf) in cartesian(Kd.comul_n(a, nE).items(), Kd.comul_n(b, nF).items()):
            sw = {"E": pe, "F": pf}
            w = ce * cf
            for x, y, kind in factors:
                w *= self._factor(self._leg(x, sw), self._leg(y, sw), kind)
                if not w:
                    break
            if w:
                emit(sw, w)

    def _apply_S(self, v: Vec, legs) -> Vec:
        out: Vec = {}
        Kd = self.Kd
        for t, c in v.items():
            terms = {t: c}
            for i in legs:
                terms = {u[:i] + (z,) + u[i + 1:]: cu * cz for u, cu in terms.items()
                         for z, cz in Kd.S[u[i]].items()}
            vadd(out, terms)
        return out

    def _place(self, legs: Dict[int, Vec]) -> Vec:
        Kd, E = self.Kd, self.fa.E
        out: Vec = {(): ONE}
        for i in range(E):
            v = legs.get(i, Kd.unit)
            out = {t + (a,): c * ca for t, c in out.items() for a, ca in v.items()}
        return {t: c for t, c in out.items() if c}

    def product(self, x: str, a: int, y: str, b: int) -> Vec:
        """(alpha^a)_x * (alpha^b)_y."""
        fa, Kd = self.fa, self.Kd
        if x == y:
            return self._same_edge(x, a, b)
        case, e_edge, f_edge, rev = self.reduction(x, y)
        # inputs on reversed legs go through S
        ain = Kd.S[a] if x in rev else {a: ONE}
        bin_ = Kd.S[b] if y in rev else {b: ONE}
        order = "ef" if x == e_edge else "fe"
        elem = {x: ain, y: bin_}
        factors, out_legs = PAIR_CASES[case][order]
        ie, jf = fa.edge_pos[e_edge], fa.edge_pos[f_edge]
        acc: Vec = {}
        for ea, ca in elem[e_edge].items():
            for fb, cb in elem[f_edge].items():
                def emit(sw, w, ca=ca, cb=cb):
                    le = self._leg(out_legs[0], sw)
                    lf = self._leg(out_legs[1], sw)
                    vadd(acc, self._place({ie: le, jf: lf}), ca * cb * w)
                self._evaluate(factors, ea, fb, out_legs, emit)
        return self._apply_S(acc, [fa.edge_pos[z] for z in rev])

    def _same_edge(self, e: str, a: int, b: int) -> Vec:
        fa, Kd = self.fa, self.Kd
        g = fa.graph
        rev = g.is_loop(e) and g.less(("s", e), ("t", e))
        case = "b" if g.is_loop(e) else "a"
        factors, out_legs = SAME_EDGE_CASES[case]
        ain = Kd.S[a] if rev else {a: ONE}
        bin_ = Kd.S[b] if rev else {b: ONE}
        i = fa.edge_pos[e]
        acc: Vec = {}
        for xa, ca in ain.items():
            for yb, cb in bin_.items():
                def emit(sw, w, ca=ca, cb=cb):
                    prod = Kd.mul(self._leg(out_legs[0], sw), self._leg(out_legs[1], sw))
                    vadd(acc, self._place({i: prod}), ca * cb * w)
                self._evaluate(factors, xa, yb, out_legs, emit)
        return self._apply_S(acc, [i] if rev else [])


def compare_routes(fa: FunctionAlgebra) -> Report:
    """Explicit relations against the pullback along G* on every generator pair."""
    rep = Report(f"explicit relations vs embedding on {fa.graph!r}")
    ex = ExplicitRelations(fa)
    d = fa.Kd.dim
    for x in fa.edges:
        for y in fa.edges:
            if x == y:
                label = "case " + ("b" if fa.graph.is_loop(x) else "a")
            else:
                label = f"case {ex.reduction(x, y)[0]}"
            bad = None
            for a in range(d):
                for b in range(d):
                    lhs = ex.product(x, a, y, b)
                    rhs = fa.mul(fa.generator(x, {a: ONE}), fa.generator(y, {b: ONE}))
                    if lhs != rhs:
                        bad = (x, a, y, b)
                        break
                if bad:
                    break
            rep.add(f"{label} ({x},{y})", bad)
    return rep


def cases_covered(g: CiliatedRibbonGraph) -> set:
    out = set()
    for x in g.edge_ids:
        out.add("b" if g.is_loop(x) else "a")
        for y in g.edge_ids:
            if x != y:
                out.add(_reduce_pair(g, x, y)[0])
    return out
