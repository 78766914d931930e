"""The single-loop and single-edge algebras identified with known algebras.

Loop: D(α) = <S^{-1}(α), Q_(1)> Q_(2) with Q = R21 R maps (K*, ·') to K^op.
Edge, K = D(H): K* = H^op (x) H* as an algebra, and the flip α (x) h -> h (x) α
is an algebra isomorphism from the left Heisenberg double of H^op onto (K*, ·').
The map α (x) h -> (h (x) ε) ·' (1 (x) S(α)) is an anti-isomorphism from the left
Heisenberg double of H itself.
"""
from __future__ import annotations

from typing import Dict, Tuple

from .catalog import single_edge, single_loop
from .exact import ONE, Coordinates, Vec, vadd, vaddk
from .gauge import FunctionAlgebra, build_function_algebra, dual_of
from .hopf import FiniteHopfAlgebra, QuasitriangularData, Report, drinfeld_double, flip, tmul


def heisenberg_double(H: FiniteHopfAlgebra) -> Dict[Tuple[int, int], Vec]:
    """Structure constants of H* # H on the basis α^i (x) x_j, index i*d + j.

    (α (x) h)(α' (x) h') = <α'_(2), h_(1)> α α'_(1) (x) h_(2) h'
    """
    Hd = dual_of(H)
    d = H.dim
    out: Dict[Tuple[int, int], Vec] = {}
    for i in range(d):
        for j in range(d):
            for k in range(d):
                for l in range(d):
                    v: Vec = {}
                    for (a1, a2), ca in Hd.delta[k].items():
                        for (h1, h2), ch in H.delta[j].items():
                            if a2 != h1:
                                continue
                            for p, cp in Hd.m[(i, a1)].items():
                                for q, cq in H.m[(h2, l)].items():
                                    vaddk(v, p * d + q, ca * ch * cp * cq)
                    out[(i * d + j, k * d + l)] = v
    return out


def opposite(H: FiniteHopfAlgebra) -> FiniteHopfAlgebra:
    """H^op: opposite product, same coproduct, antipode S^{-1}."""
    d = H.dim
    m = {(i, j): H.m[(j, i)] for i in range(d) for j in range(d)}
    S = {i: H.antipode_inv({i: ONE}) for i in range(d)}
    return FiniteHopfAlgebra(H.labels, m, H.unit, H.delta, H.counit, S, name=H.name + "^op")


def flip_index(H: FiniteHopfAlgebra, n: int) -> int:
    """α^i (x) x_j sits at i*d + j in H* # H; x_j (x) α^i is the dual basis element j*d + i of D(H)*."""
    d = H.dim
    i, j = divmod(n, d)
    return j * d + i


def _flip_matches(fa: FunctionAlgebra, H: FiniteHopfAlgebra, table, anti: bool):
    n = fa.K.dim
    for a in range(n):
        for b in range(n):
            lhs = {(flip_index(H, c),): w for c, w in table[(a, b)].items()}
            x, y = (flip_index(H, b), flip_index(H, a)) if anti else (flip_index(H, a), flip_index(H, b))
            if lhs != fa.mul_basis((x,), (y,)):
                return (a, b)
    return None


def edge_identification_report(H: FiniteHopfAlgebra) -> Report:
    """Single-edge algebra for K = D(H) against the Heisenberg double of H^op through the flip."""
    K, qt = drinfeld_double(H)
    fa = build_function_algebra(single_edge(), K, qt)
    n = K.dim
    rep = Report(f"single edge for D({H.name}) vs left Heisenberg double")
    images = sorted(flip_index(H, a) for a in range(n))
    rep.add("flip is a bijection", None if images == list(range(n)) else images)
    rep.add("flip: H^op* # H^op -> (K*, ·') multiplicative",
            _flip_matches(fa, H, heisenberg_double(opposite(H)), anti=False))
    return rep


def twisted_flip(H: FiniteHopfAlgebra, fa: FunctionAlgebra) -> Dict[int, Vec]:
    """Columns of α^i (x) x_j -> (x_j (x) ε) ·' (1 (x) S(α^i)) in (K*, ·')."""
    Hd = dual_of(H)
    d = H.dim

    def kstar(alpha: Vec, h: Vec) -> Vec:
        return {(j * d + i,): ca * ch for i, ca in alpha.items() for j, ch in h.items()}

    return {i * d + j: fa.mul(kstar(Hd.unit, {j: ONE}), kstar(Hd.S[i], H.unit))
            for i in range(d) for j in range(d)}


def heisenberg_anti_isomorphism_report(H: FiniteHopfAlgebra) -> Report:
    """(K*, ·') against the opposite of the left Heisenberg double of H through twisted_flip."""
    K, qt = drinfeld_double(H)
    fa = build_function_algebra(single_edge(), K, qt)
    cols = twisted_flip(H, fa)
    table = heisenberg_double(H)
    rep = Report(f"single edge for D({H.name}) vs H_L({H.name})^op")
    try:
        Coordinates([cols[a] for a in range(K.dim)])
        rep.add("bijective")
    except ValueError:
        rep.add("bijective", "twisted flip has a kernel")

    def phi(v: Vec) -> Vec:
        out: Vec = {}
        for c, w in v.items():
            vadd(out, cols[c], w)
        return out

    bad = next(((a, b) for a in range(K.dim) for b in range(K.dim)
                if phi(table[(a, b)]) != fa.mul(cols[b], cols[a])), None)
    rep.add("phi(xy) = phi(y) ·' phi(x)", bad)
    return rep


def literal_flip_report(H: FiniteHopfAlgebra) -> Report:
    """flip(xy) = flip(y) ·' flip(x) for x, y in H* # H."""
    K, qt = drinfeld_double(H)
    fa = build_function_algebra(single_edge(), K, qt)
    rep = Report(f"flip as anti-isomorphism from H* # H, H = {H.name}")
    rep.add("flip(xy) = flip(y) ·' flip(x)", _flip_matches(fa, H, heisenberg_double(H), anti=True))
    return rep


def loop_map(K: FiniteHopfAlgebra, qt: QuasitriangularData) -> Dict[int, Vec]:
    """Columns of D: K* -> K on the dual basis."""
    q = tmul(K, flip(qt.r_matrix), qt.r_matrix)
    cols: Dict[int, Vec] = {a: {} for a in range(K.dim)}
    for (q1, q2), c in q.items():
        sinv = K.antipode_inv({q1: ONE})
        for a, ca in sinv.items():
            vaddk(cols[a], q2, c * ca)
    return cols


def loop_identification_report(K: FiniteHopfAlgebra, qt: QuasitriangularData,
                               fa: FunctionAlgebra = None) -> Report:
    fa = fa or build_function_algebra(single_loop(), K, qt)
    cols = loop_map(K, qt)
    rep = Report(f"single loop for {K.name} vs K^op")

    def D(x: Vec) -> Vec:
        out: Vec = {}
        for (a,), c in x.items():
            vadd(out, cols[a], c)
        return out

    bad = None
    for a in range(K.dim):
        for b in range(K.dim):
            if D(fa.mul_basis((a,), (b,))) != K.mul(cols[b], cols[a]):
                bad = (a, b)
                break
        if bad:
            break
    rep.add("D(x ·' y) = D(y) D(x)", bad)
    try:
        Coordinates([cols[a] for a in range(K.dim)])
        rep.add("D bijective")
    except ValueError:
        rep.add("D bijective", "D has a kernel")
    return rep
