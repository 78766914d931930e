"""Holonomies, curvatures, face projectors and the quantum moduli algebra."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Dict, List, Optional, Sequence, Tuple

from .exact import (ONE, ZERO, Coordinates, NotClosed, Vec, kernel_vectors, rref, restrict_algebra,
                    vadd, vaddk, vscale)
from .gauge import FunctionAlgebra
from .graph import (CiliatedRibbonGraph, Face, PathWord, closed_path_order, compatible_with_ciliation,
                    compose, faces, traverses_cilium, verify_regularity_witness)
from .hopf import FiniteHopfAlgebra, NotSemisimple, Report


class CiliationIncompatible(ValueError):
    pass


class GraphAssumptionViolated(ValueError):
    pass


class NonCommutingProjectors(ArithmeticError):
    pass


def _legwise(Kd: FiniteHopfAlgebra, legs: Sequence[Optional[Vec]]) -> Vec:
    """Tensor product over edges; missing legs carry the unit of K*."""
    out: Vec = {(): ONE}
    for v in legs:
        v = Kd.unit if v is None else v
        out = {t + (a,): c * ca for t, c in out.items() for a, ca in v.items()}
    return {t: c for t, c in out.items() if c}


@dataclass
class HolonomyMap:
    """hol*_p : K* -> (K*)^{(x)E}, stored column by column on the dual basis."""

    path: PathWord
    cols: Dict[int, Vec]
    fa: FunctionAlgebra = field(repr=False)

    def __call__(self, alpha: Vec) -> Vec:
        out: Vec = {}
        for a, c in alpha.items():
            vadd(out, self.cols[a], c)
        return out

    def hol(self, k: Tuple) -> Vec:
        """The transpose hol_p : K^{(x)E} -> K on a basis connection."""
        return {a: col[k] for a, col in self.cols.items() if col.get(k)}

    def hol_vec(self, k: Vec) -> Vec:
        out: Vec = {}
        for t, c in k.items():
            vadd(out, self.hol(t), c)
        return out


def holonomy_columns(Kd: FiniteHopfAlgebra, letters, leg_of: Dict[str, int], nlegs: int) -> Dict[int, Vec]:
    """hol* on the dual basis with legs given by ``leg_of``.

    The i-th traversed letter receives alpha_(n+1-i), inverse letters go through S,
    and letters on the same leg multiply in K* in traversal order.
    """
    n = len(letters)
    cols: Dict[int, Vec] = {}
    for a in range(Kd.dim):
        if n == 0:
            cols[a] = {k: c * Kd.counit[a] for k, c in _legwise(Kd, [None] * nlegs).items()
                       if Kd.counit[a]}
            continue
        col: Vec = {}
        for parts, c in Kd.comul_n(a, n).items():
            legs: List[Optional[Vec]] = [None] * nlegs
            for i, (e, x) in enumerate(letters):
                b = parts[n - 1 - i]
                beta = {b: ONE} if x > 0 else Kd.S[b]
                j = leg_of[e]
                legs[j] = beta if legs[j] is None else Kd.mul(legs[j], beta)
            vadd(col, _legwise(Kd, legs), c)
        cols[a] = col
    return cols


def holonomy(fa: FunctionAlgebra, p: PathWord) -> HolonomyMap:
    if not fa.K.is_semisimple():
        raise NotSemisimple("holonomies are only defined here for semisimple K")
    return HolonomyMap(p, holonomy_columns(fa.Kd, p.letters, fa.edge_pos, fa.E), fa)


def _coproduct_connection(K: FiniteHopfAlgebra, k: Tuple) -> Vec:
    """Delta of K^{(x)E} on a basis tuple, keyed by (k', k'')."""
    out: Vec = {((), ()): ONE}
    for i in k:
        out = {(a + (x,), b + (y,)): c * cd for (a, b), c in out.items()
               for (x, y), cd in K.delta[i].items()}
    return out


def functor_law_holds(fa: FunctionAlgebra, p: PathWord, q: PathWord) -> bool:
    """hol_{q o p}(k) = hol_q(k'') hol_p(k') for every basis connection k."""
    K = fa.K
    hp, hq = holonomy(fa, p), holonomy(fa, q)
    hqp = holonomy(fa, compose(q, p))
    for k in fa.basis():
        rhs: Vec = {}
        for (k1, k2), c in _coproduct_connection(K, k).items():
            a, b = hq.hol(k2), hp.hol(k1)
            if a and b:
                vadd(rhs, K.mul(a, b), c)
        if hqp.hol(k) != rhs:
            return False
    return True


def curvature(fa: FunctionAlgebra, f) -> HolonomyMap:
    return holonomy(fa, f.path if isinstance(f, Face) else f)


def flatness_check(fa: FunctionAlgebra, k: Vec, f) -> bool:
    """hol_f(k) = eps(k) 1."""
    K = fa.K
    eps = ZERO
    for t, c in k.items():
        w = c
        for i in t:
            w *= K.counit[i]
        eps += w
    return curvature(fa, f).hol_vec(k) == vscale(K.unit, eps)


# --- characters -------------------------------------------------------------------

def character_projector(K: FiniteHopfAlgebra, ell: Vec) -> Dict[int, Vec]:
    """pi(alpha)(x) = alpha(ell_(1) x S(ell_(2))), the coadjoint average onto C(K)."""
    cols: Dict[int, Vec] = {a: {} for a in range(K.dim)}
    for b in range(K.dim):
        z: Vec = {}
        for l, cl in ell.items():
            for (l1, l2), c in K.delta[l].items():
                vadd(z, K.mul(K.m[(l1, b)], K.S[l2]), cl * c)
        for a, c in z.items():
            vaddk(cols[a], b, c)
    return cols


def character_algebra_basis(K: FiniteHopfAlgebra) -> List[Vec]:
    """C(K) = {alpha : alpha(xy) = alpha(yx)}, i.e. Delta(alpha) = Delta^op(alpha) in K*."""
    d = K.dim
    cols: List[Vec] = []
    for a in range(d):
        col: Vec = {}
        for i in range(d):
            for j in range(d):
                c = K.m[(i, j)].get(a, ZERO) - K.m[(j, i)].get(a, ZERO)
                if c:
                    col[(i, j)] = c
        cols.append(col)
    return kernel_vectors(cols, d)


def haar_of_dual(fa: FunctionAlgebra) -> Vec:
    from .hopf import haar_integral
    return haar_integral(fa.Kd)


# --- face projectors ------------------------------------------------------------------

@dataclass
class FaceProjector:
    face: Face
    element: Vec
    on: str
    fa: FunctionAlgebra = field(repr=False)

    def __call__(self, x: Vec) -> Vec:
        return self.fa.mul(self.element, x)


def face_projector(fa: FunctionAlgebra, f, on: str = "full") -> FaceProjector:
    """P*_f = multiplication by the curvature of the dual Haar integral.

    on="full" needs a face compatible with the ciliation; on="invariants" uses
    Pi(hol*_f(eta)), which does not depend on the cilia, and is meant for 𝒜*_inv.
    """
    face = f if isinstance(f, Face) else Face(f)
    eta = haar_of_dual(fa)
    c = curvature(fa, face)(eta)
    if on == "full":
        if not compatible_with_ciliation(fa.graph, face):
            raise CiliationIncompatible(f"face {face} is not compatible with the ciliation")
    elif on == "invariants":
        c = fa.project(c)
    else:
        raise ValueError("on must be 'full' or 'invariants'")
    return FaceProjector(face, c, on, fa)


def face_adjustable(g: CiliatedRibbonGraph, f: Face) -> bool:
    """Some choice of cilia at the vertices of f makes f compatible with the ciliation."""
    verts = sorted({g.letter_endpoints(x)[0] for x in f.path.letters})
    for steps in cartesian(*[range(g.valence(v)) for v in verts]):
        h = g
        for v, k in zip(verts, steps):
            if k:
                h = h.rotate_cilium(v, k)
        if compatible_with_ciliation(h, f):
            return True
    return False


def moduli_assumption_violations(g: CiliatedRibbonGraph) -> List[str]:
    out = [f"univalent vertex {v}" for v in g.vertices if g.valence(v) == 1]
    for f in faces(g):
        if not face_adjustable(g, f):
            out.append(f"face {f} cannot be made compatible with the ciliation")
    return out


@dataclass
class ModuliAlgebra:
    basis: List[Vec]
    structure: Dict[Tuple[int, int], Vec]
    faces: List[Face]
    projectors: List[FaceProjector]
    assumption_violations: List[str]
    report: Report
    graph: CiliatedRibbonGraph = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)


def _matrix_on(co: Coordinates, basis: List[Vec], fn) -> List[Vec]:
    out = []
    for i, b in enumerate(basis):
        c, residual = co.solve(fn(b))
        if residual:
            raise NotClosed(i, "P", residual)
        out.append(c)
    return out


def _compose_cols(a: List[Vec], b: List[Vec]) -> List[Vec]:
    """Columns of A∘B."""
    out = []
    for col in b:
        acc: Vec = {}
        for j, c in col.items():
            vadd(acc, a[j], c)
        out.append(acc)
    return out


def moduli_algebra(fa: FunctionAlgebra, strict: bool = False) -> ModuliAlgebra:
    """ℳ = image of the product of the face projectors inside 𝒜*_inv.

    With strict=True a graph outside the regularity assumptions is rejected;
    otherwise the violations are recorded and every property the construction
    relies on (centrality, idempotence, commuting projectors) is checked exactly.
    """
    g = fa.graph
    violations = moduli_assumption_violations(g)
    if strict and violations:
        raise GraphAssumptionViolated("; ".join(violations))
    rep = Report(f"moduli algebra on {g!r}")
    inv = fa.invariant_basis()
    co = Coordinates(inv)
    fs = faces(g)
    projs = [face_projector(fa, f, on="invariants") for f in fs]
    mats = []
    for P in projs:
        central = next((i for i, b in enumerate(inv) if fa.mul(P.element, b) != fa.mul(b, P.element)), None)
        rep.add(f"central {P.face}", None if central is None else (central,))
        M = _matrix_on(co, inv, P)
        rep.add(f"idempotent {P.face}", None if _compose_cols(M, M) == M else (str(P.face),))
        mats.append(M)
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            if _compose_cols(mats[i], mats[j]) != _compose_cols(mats[j], mats[i]):
                raise NonCommutingProjectors(f"P*_{fs[i]} and P*_{fs[j]} do not commute")
    rep.add("projectors commute")
    flat = [{j: ONE} for j in range(len(inv))]
    for M in mats:
        flat = _compose_cols(M, flat)
    images = []
    for col in flat:
        v: Vec = {}
        for j, c in col.items():
            vadd(v, inv[j], c)
        images.append(v)
    basis = rref(images)
    structure = restrict_algebra(fa.mul, basis) if basis else {}
    return ModuliAlgebra(basis, structure, fs, projs, violations, rep, g)


# --- commutation and covariance -----------------------------------------------------

def _pair_R(Kd: FiniteHopfAlgebra, r: Vec, x: Vec, y: Vec):
    """<x (x) y, R> for x, y in K*."""
    return sum((cx * cy * r.get((a, b), ZERO) for a, cx in x.items() for b, cy in y.items()), ZERO)


def _pair(x: Vec, h: Vec):
    return sum((c * h.get(a, ZERO) for a, c in x.items()), ZERO)


def holtrafo_rhs(fa: FunctionAlgebra, p: PathWord, hp: HolonomyMap, a: int, b: int) -> Vec:
    """Right-hand side for hol*_p(beta) hol*_p(alpha) with alpha = a, beta = b."""
    Kd, R, Rinv = fa.Kd, fa.qt.r_matrix, fa.qt.r_inverse
    out: Vec = {}
    if p.start != p.target:
        for (a1, a2), ca in Kd.delta[a].items():
            for (b1, b2), cb in Kd.delta[b].items():
                r = R.get((a1, b1), ZERO)
                if r:
                    vadd(out, hp(Kd.m[(a2, b2)]), ca * cb * r)
        return out
    order = closed_path_order(fa.graph, p)
    for (a1, a2, a3), ca in Kd.comul_n(a, 3).items():
        for (b1, b2, b3), cb in Kd.comul_n(b, 3).items():
            if order == "t<s":
                w = _pair_R(Kd, R, {a1: ONE}, Kd.S[b3]) * R.get((a2, b1), ZERO)
                prod = Kd.m[(a3, b2)]
            else:
                w = Rinv.get((a3, b1), ZERO) * R.get((a1, b2), ZERO)
                prod = Kd.m[(a2, b3)]
            if w:
                vadd(out, hp(prod), ca * cb * w)
    return out


def holeq_rhs(fa: FunctionAlgebra, p: PathWord, hp: HolonomyMap, a: int, v: str, k: int) -> Vec:
    """Right-hand side for hol*_p(alpha) <| (k)_v."""
    K, Kd = fa.K, fa.Kd
    u, w = p.start, p.target
    hk = {k: ONE}
    if v not in (u, w):
        return vscale(hp.cols[a], K.counit[k])
    out: Vec = {}
    for (a1, a2, a3), c in Kd.comul_n(a, 3).items():
        if u != w:
            hw = hk if v == w else K.unit
            hu = hk if v == u else K.unit
            x = _pair({a1: ONE}, hw) * _pair({a3: ONE}, K.antipode(hu))
        elif closed_path_order(fa.graph, p) == "t<s":
            x = _pair(Kd.mul({a1: ONE}, Kd.S[a3]), hk)
        else:
            x = _pair(Kd.mul(Kd.S[a3], {a1: ONE}), hk)
        if x:
            vadd(out, hp.cols[a2], c * x)
    return out


def holonomy_commutation_report(fa: FunctionAlgebra, p: PathWord, q: Optional[PathWord] = None,
                                witness: Optional[Tuple[Sequence[str], PathWord]] = None) -> Report:
    """Exact checks on full dual bases.

    With q sharing no vertex with p: the holonomies commute. Otherwise (q None or q = p)
    the product and gauge-covariance relations of a regular path that avoids the
    cilia; ``witness`` = (moves, p') is verified first when supplied.
    """
    rep = Report(f"holonomy relations for {p}")
    Kd = fa.Kd
    hp = holonomy(fa, p)
    if q is not None and q != p:
        hq = holonomy(fa, q)
        vp = {fa.graph.letter_endpoints(x)[i] for x in p.letters for i in (0, 1)} | {p.start}
        vq = {fa.graph.letter_endpoints(x)[i] for x in q.letters for i in (0, 1)} | {q.start}
        if vp & vq:
            raise ValueError("paths share a vertex; only the disjoint case is covered")
        bad = None
        for a in range(Kd.dim):
            for b in range(Kd.dim):
                x, y = hp.cols[a], hq.cols[b]
                if fa.mul(x, y) != fa.mul(y, x):
                    bad = (a, b)
                    break
            if bad:
                break
        rep.add("disjoint paths commute", bad)
        return rep
    if witness is not None:
        ok, msg = verify_regularity_witness(fa.graph, p, *witness)
        rep.add("regularity witness", None if ok else (msg,))
    rep.add("avoids cilia", None if not traverses_cilium(fa.graph, p) else (str(p),))
    bad = None
    for a in range(Kd.dim):
        for b in range(Kd.dim):
            if fa.mul(hp.cols[b], hp.cols[a]) != holtrafo_rhs(fa, p, hp, a, b):
                bad = (a, b)
                break
        if bad:
            break
    rep.add("product relation", bad)
    bad = None
    for a in range(Kd.dim):
        for v in fa.graph.vertices:
            for k in range(fa.K.dim):
                if fa.act_at(hp.cols[a], v, {k: ONE}) != holeq_rhs(fa, p, hp, a, v, k):
                    bad = (a, v, k)
                    break
            if bad:
                break
        if bad:
            break
    rep.add("gauge covariance", bad)
    return rep
