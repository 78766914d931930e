"""Algebra maps induced by graph moves.

A move Γ -> Γ' comes with an assignment of every sub-edge of the subdivided
result to a word in the subdivided source. Sending the end generator (α)_{end'}
to the holonomy of that word gives f* between the vertex neighbourhoods.
Generator images are F*((α)_e') = G*_Γ^{-1} f* G*_{Γ'} (α)_e', and F* on a basis
element is the product of the generator images of its ordered monomial
expansion. square_report compares this with G*_Γ^{-1} f* G*_{Γ'} on all of 𝒜*_{Γ'}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .exact import ONE, Coordinates, Vec, rref, vadd
from .gauge import FunctionAlgebra, NotInImage, build_function_algebra
from .graph import GraphMoveResult, sub_edge
from .holonomy import holonomy_columns
from .hopf import FiniteHopfAlgebra, QuasitriangularData, Report


@dataclass
class MoveMap:
    kind: str
    source: FunctionAlgebra          # 𝒜*_Γ, the codomain of F*
    target: FunctionAlgebra          # 𝒜*_{Γ'}, the domain of F*
    move: GraphMoveResult = field(repr=False)
    cols: Dict[Tuple, Vec] = field(default_factory=dict, repr=False)
    _gens: Dict[Tuple[int, int], Vec] = field(default_factory=dict, repr=False)
    _pure: Dict[Tuple, Vec] = field(default_factory=dict, repr=False)
    _genimg: Dict[Tuple[str, int], Vec] = field(default_factory=dict, repr=False)
    _monimg: Dict[int, Vec] = field(default_factory=dict, repr=False)
    _mono: Optional[Coordinates] = field(default=None, repr=False)

    def _generator_image(self, i: int, a: int) -> Vec:
        """f*((α^a) on the i-th end of Γ')."""
        key = (i, a)
        res = self._gens.get(key)
        if res is None:
            fa = self.source
            end2 = self.target.ends[i]
            path = self.move.end_map[sub_edge(end2)]
            leg_of = {sub_edge(end): fa.end_pos[end] for end in fa.ends}
            cols = holonomy_columns(fa.Kd, path.letters, leg_of, len(fa.ends))
            res = self._gens[key] = cols[a]
        return res

    def fstar_pure(self, t: Tuple) -> Vec:
        """f* of a pure tensor of Γ' ends: ordered product of the generator images."""
        res = self._pure.get(t)
        if res is None:
            fa = self.source
            res = _tensor_unit(fa)
            for i, a in enumerate(t):
                res = fa.ambient_mul(res, self._generator_image(i, a))
            self._pure[t] = res
        return res

    def fstar(self, z: Vec) -> Vec:
        out: Vec = {}
        for t, c in z.items():
            vadd(out, self.fstar_pure(t), c)
        return out

    def through_neighbourhoods(self, x: Vec) -> Vec:
        """G*_Γ^{-1} f* G*_{Γ'} (x); raises NotInImage if f* leaves the image of G*_Γ."""
        return self.source.ginv(self.fstar(self.target.gstar(x)), check=True)

    def generator_image(self, e: str, a: int) -> Vec:
        key = (e, a)
        res = self._genimg.get(key)
        if res is None:
            res = self._genimg[key] = self.through_neighbourhoods(self.target.generator(e, {a: ONE}))
        return res

    def _monomials(self) -> Coordinates:
        """Ordered generator monomials prod_e (x_e)_e, a basis of 𝒜*_{Γ'}."""
        if self._mono is None:
            tgt = self.target
            cols = []
            for x in tgt.basis():
                m = tgt.unit()
                for e, a in zip(tgt.edges, x):
                    m = tgt.mul(m, tgt.generator(e, {a: ONE}))
                cols.append(m)
            self._mono = Coordinates(cols)
        return self._mono

    def _monomial_image(self, i: int) -> Vec:
        res = self._monimg.get(i)
        if res is None:
            src, tgt = self.source, self.target
            x = tgt.basis()[i]
            res = src.unit()
            for e, a in zip(tgt.edges, x):
                res = src.mul(res, self.generator_image(e, a))
            self._monimg[i] = res
        return res

    def apply_basis(self, x: Tuple) -> Vec:
        """F* on a basis element, extended multiplicatively from the generator images."""
        col = self.cols.get(x)
        if col is None:
            col = {}
            for i, c in self._monomials().coords({x: ONE}).items():
                vadd(col, self._monomial_image(i), c)
            self.cols[x] = col
        return col

    def __call__(self, x: Vec) -> Vec:
        out: Vec = {}
        for t, c in x.items():
            vadd(out, self.apply_basis(t), c)
        return out

    def matrix(self) -> Dict[Tuple, Vec]:
        for x in self.target.basis():
            self.apply_basis(x)
        return dict(self.cols)

    def rank(self) -> int:
        return len(rref(self.matrix().values()))


def _tensor_unit(fa: FunctionAlgebra) -> Vec:
    out: Vec = {(): ONE}
    for _ in fa.ends:
        out = {t + (a,): c * ca for t, c in out.items() for a, ca in fa.Kd.unit.items()}
    return out


def move_map(move: GraphMoveResult, K: FiniteHopfAlgebra, qt: QuasitriangularData,
             source: Optional[FunctionAlgebra] = None, rho="t") -> MoveMap:
    src = source or build_function_algebra(move.source, K, qt, rho=rho)
    tgt = build_function_algebra(move.graph, K, qt, rho=rho)
    return MoveMap(move.kind, src, tgt, move)


def homomorphism_report(mm: MoveMap) -> Report:
    """Unit, multiplicativity and gauge equivariance of F*.

    Multiplicativity is checked on (generator, basis element) pairs, which
    suffices because the generators generate. Gauge equivariance at a vertex of
    Γ outside the image of the vertex map means acting by the counit.
    """
    src, tgt = mm.source, mm.target
    rep = Report(f"move map {mm.kind}: {tgt!r} -> {src!r}")
    rep.add("unit", None if mm(tgt.unit()) == src.unit() else "F*(1) != 1")
    basis = tgt.basis()
    gens = [tgt.generator(e, {a: ONE}) for e in tgt.edges for a in range(tgt.d)]
    bad = None
    for g in gens:
        fg = mm(g)
        for y in basis:
            if mm(tgt.mul(g, {y: ONE})) != src.mul(fg, mm.apply_basis(y)):
                bad = (g, y)
                break
        if bad:
            break
    rep.add("multiplicative", bad)
    Kb = range(src.d)
    vmap = mm.move.vertex_map
    bad = None
    for v2 in tgt.graph.vertices:
        v = vmap[v2]
        for x in basis:
            fx = mm.apply_basis(x)
            for k in Kb:
                h = {k: ONE}
                if mm(tgt.act_at({x: ONE}, v2, h)) != src.act_at(fx, v, h):
                    bad = (v2, x, k)
                    break
            if bad:
                break
        if bad:
            break
    rep.add("equivariant at image vertices", bad)
    outside = [v for v in src.graph.vertices if v not in set(vmap.values())]
    bad = None
    for v in outside:
        for x in basis:
            fx = mm.apply_basis(x)
            for k in Kb:
                eps = src.K.counit[k]
                expect = {t: c * eps for t, c in fx.items() if eps}
                if src.act_at(fx, v, {k: ONE}) != expect:
                    bad = (v, x, k)
                    break
            if bad:
                break
        if bad:
            break
    if outside:
        rep.add("trivial action at vertices outside the image", bad)
    return rep


def contraction_report(mm: MoveMap) -> Report:
    """Injectivity of F* and bijectivity on gauge invariants for a contraction."""
    src, tgt = mm.source, mm.target
    rep = Report(f"contraction {mm.move.params.get('edge')}")
    r = mm.rank()
    rep.add("injective", None if r == tgt.dim else f"rank {r} < {tgt.dim}")
    inv_t = tgt.invariant_basis()
    inv_s = src.invariant_basis()
    rep.add("equal invariant dimensions",
            None if len(inv_t) == len(inv_s) else f"{len(inv_t)} != {len(inv_s)}")
    images = [mm(x) for x in inv_t]
    span_s = rref(inv_s)
    outside: List[int] = [i for i, y in enumerate(images) if len(rref(span_s + [y])) != len(span_s)]
    rep.add("invariants map to invariants", outside or None)
    ri = len(rref(images))
    rep.add("bijective on invariants", None if ri == len(inv_s) == len(inv_t) else f"rank {ri}")
    return rep


def square_report(mm: MoveMap) -> Report:
    """Compare F* with the route G*_Γ^{-1} f* G*_{Γ'} on every basis element."""
    rep = Report(f"commuting square for {mm.kind}")
    bad = None
    for x in mm.target.basis():
        try:
            other = mm.through_neighbourhoods({x: ONE})
        except NotInImage:
            bad = (x, "f* leaves the image of G*")
            break
        if other != mm.apply_basis(x):
            bad = (x, "routes differ")
            break
    rep.add("f* G* = G* F*", bad)
    return rep
