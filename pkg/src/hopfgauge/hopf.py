"""Finite-dimensional Hopf algebras given by explicit structure constants."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .exact import (ONE, ZERO, Coordinates, SparseTensor, Vec, kernel_vectors,
                    multi_indices, vadd, vaddk, vscale)


class InvalidGroup(ValueError):
    pass


class NotSemisimple(ArithmeticError):
    pass


class NoHaar(ArithmeticError):
    pass


class RMatrixMismatch(ValueError):
    pass


# --- groups -------------------------------------------------------------------

@dataclass(frozen=True)
class GroupTable:
    order: int
    element_names: Tuple[str, ...]
    product: Tuple[Tuple[int, ...], ...]
    identity: int = field(init=False)
    inverse: Tuple[int, ...] = field(init=False)

    def __post_init__(self):
        n = self.order
        names = tuple(self.element_names)
        prod = tuple(tuple(r) for r in self.product)
        object.__setattr__(self, "element_names", names)
        object.__setattr__(self, "product", prod)
        if n < 1 or len(names) != n or len(set(names)) != n:
            raise InvalidGroup("element names must be distinct and match the order")
        if len(prod) != n or any(len(r) != n for r in prod):
            raise InvalidGroup("Cayley table must be order x order")
        if any(not 0 <= x < n for r in prod for x in r):
            raise InvalidGroup("table entry out of range")
        ids = [e for e in range(n) if all(prod[e][g] == g and prod[g][e] == g for g in range(n))]
        if not ids:
            raise InvalidGroup("no identity element")
        e = ids[0]
        inv = []
        for g in range(n):
            hs = [h for h in range(n) if prod[g][h] == e and prod[h][g] == e]
            if not hs:
                raise InvalidGroup(f"element {names[g]} has no inverse")
            inv.append(hs[0])
        for a in range(n):
            for b in range(n):
                ab = prod[a][b]
                for c in range(n):
                    if prod[ab][c] != prod[a][prod[b][c]]:
                        raise InvalidGroup(
                            f"associativity fails at ({names[a]}, {names[b]}, {names[c]})")
        object.__setattr__(self, "identity", e)
        object.__setattr__(self, "inverse", tuple(inv))

    def mul(self, a: int, b: int) -> int:
        return self.product[a][b]

    def index(self, name: str) -> int:
        return self.element_names.index(name)

    @property
    def abelian(self) -> bool:
        return all(self.product[a][b] == self.product[b][a]
                   for a in range(self.order) for b in range(self.order))


def cyclic_group(n: int) -> GroupTable:
    names = ["e"] + [f"a{k}" if n > 2 else "a" for k in range(1, n)]
    if n == 3:
        names = ["e", "a", "b"]
    return GroupTable(n, names, [[(i + j) % n for j in range(n)] for i in range(n)])


def symmetric_group_3() -> GroupTable:
    perms = [(0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 1, 0), (1, 2, 0), (2, 0, 1)]
    names = ["e", "s12", "s23", "s13", "c", "cc"]

    def compose(p, q):  # p after q
        return tuple(p[q[i]] for i in range(3))

    table = [[perms.index(compose(p, q)) for q in perms] for p in perms]
    return GroupTable(6, names, table)


# --- Hopf algebras ------------------------------------------------------------

class FiniteHopfAlgebra:
    """Structure constants over the basis x_0..x_{d-1}.

    ``m[(i, j)]`` is x_i x_j, ``delta[i]`` is Δ(x_i) keyed by pairs,
    ``S[i]`` is S(x_i); ``unit`` is a vector and ``counit`` a list.
    """

    def __init__(self, labels, m, unit, delta, counit, S, name="H", cocommutative=None):
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self.name = name
        d = self.dim
        self.m: Dict[Tuple[int, int], Vec] = {(i, j): dict(m.get((i, j), {})) for i in range(d) for j in range(d)}
        self.unit: Vec = dict(unit)
        self.delta: Dict[int, Vec] = {i: dict(delta.get(i, {})) for i in range(d)}
        self.counit: List[Fraction] = [Fraction(c) for c in counit]
        self.S: Dict[int, Vec] = {i: dict(S.get(i, {})) for i in range(d)}
        if cocommutative is None:
            cocommutative = all(
                {(b, a): c for (a, b), c in self.delta[i].items()} == self.delta[i] for i in range(d))
        self.cocommutative = cocommutative
        self._delta_n: Dict[Tuple[int, int], Vec] = {}
        self._S_inv = None

    def __repr__(self):
        return f"FiniteHopfAlgebra({self.name}, dim={self.dim})"

    def same_structure(self, other) -> bool:
        return (self.labels == other.labels and self.m == other.m and self.unit == other.unit
                and self.delta == other.delta and self.counit == other.counit and self.S == other.S)

    # structure tensors
    def mult_tensor(self) -> SparseTensor:
        d = self.dim
        return SparseTensor([("in1", d), ("in2", d), ("out", d)],
                            {(i, j, k): c for (i, j), v in self.m.items() for k, c in v.items()})

    def comult_tensor(self) -> SparseTensor:
        d = self.dim
        return SparseTensor([("in", d), ("out1", d), ("out2", d)],
                            {(i, j, k): c for i, v in self.delta.items() for (j, k), c in v.items()})

    def antipode_tensor(self) -> SparseTensor:
        d = self.dim
        return SparseTensor([("in", d), ("out", d)],
                            {(i, j): c for i, v in self.S.items() for j, c in v.items()})

    # element arithmetic
    def mul(self, x: Vec, y: Vec) -> Vec:
        out: Vec = {}
        for i, a in x.items():
            for j, b in y.items():
                vadd(out, self.m[(i, j)], a * b)
        return out

    def eps(self, x: Vec) -> Fraction:
        return sum((c * self.counit[i] for i, c in x.items()), ZERO)

    def antipode(self, x: Vec) -> Vec:
        out: Vec = {}
        for i, c in x.items():
            vadd(out, self.S[i], c)
        return out

    def antipode_inv(self, x: Vec) -> Vec:
        if self._S_inv is None:
            self._S_inv = linear_inverse(self.S, self.dim)
        out: Vec = {}
        for i, c in x.items():
            vadd(out, self._S_inv[i], c)
        return out

    def comul(self, x: Vec) -> Vec:
        out: Vec = {}
        for i, c in x.items():
            vadd(out, self.delta[i], c)
        return out

    def comul_n(self, i: int, n: int) -> Vec:
        """Iterated coproduct Δ^(n)(x_i) keyed by n-tuples (n=1 gives x_i)."""
        key = (i, n)
        if key not in self._delta_n:
            if n == 1:
                res = {(i,): ONE}
            else:
                res = {}
                for (a, b), c in self.delta[i].items():
                    for t, c2 in self.comul_n(b, n - 1).items():
                        vaddk(res, (a,) + t, c * c2)
            self._delta_n[key] = res
        return self._delta_n[key]

    def comul_n_vec(self, x: Vec, n: int) -> Vec:
        out: Vec = {}
        for i, c in x.items():
            vadd(out, self.comul_n(i, n), c)
        return out

    def basis_vector(self, i: int) -> Vec:
        return {i: ONE}

    def inverse(self, x: Vec) -> Vec:
        """Two-sided inverse of x in the algebra."""
        cols = [self.mul(x, {j: ONE}) for j in range(self.dim)]
        try:
            co = Coordinates(cols)
        except ValueError:
            raise ArithmeticError("element is not invertible")
        y = co.coords(self.unit)
        if self.mul(y, x) != self.unit:
            raise ArithmeticError("element has no two-sided inverse")
        return y

    def is_semisimple(self) -> bool:
        return all(self.antipode(self.S[i]) == {i: ONE} for i in range(self.dim))


def linear_inverse(images: Dict[int, Vec], dim: int) -> Dict[int, Vec]:
    cols = [images[i] for i in range(dim)]
    co = Coordinates(cols)
    return {j: co.coords({j: ONE}) for j in range(dim)}


def group_algebra(g: GroupTable) -> FiniteHopfAlgebra:
    n = g.order
    m = {(a, b): {g.mul(a, b): ONE} for a in range(n) for b in range(n)}
    delta = {a: {(a, a): ONE} for a in range(n)}
    S = {a: {g.inverse[a]: ONE} for a in range(n)}
    return FiniteHopfAlgebra(g.element_names, m, {g.identity: ONE}, delta, [1] * n, S,
                             name="F[G]", cocommutative=True)


def function_algebra(g: GroupTable) -> FiniteHopfAlgebra:
    n = g.order
    m = {(a, a): {a: ONE} for a in range(n)}
    delta: Dict[int, Vec] = {h: {} for h in range(n)}
    for u in range(n):
        for v in range(n):
            delta[g.mul(u, v)][(u, v)] = ONE
    counit = [1 if a == g.identity else 0 for a in range(n)]
    S = {a: {g.inverse[a]: ONE} for a in range(n)}
    labels = [f"delta_{x}" for x in g.element_names]
    return FiniteHopfAlgebra(labels, m, {a: ONE for a in range(n)}, delta, counit, S, name="Fun(G)")


def _dual_label(s: str) -> str:
    return s[1:] if s.startswith("*") else "*" + s


def dual(h: FiniteHopfAlgebra) -> FiniteHopfAlgebra:
    d = h.dim
    m: Dict[Tuple[int, int], Vec] = {}
    for k, v in h.delta.items():
        for (i, j), c in v.items():
            m.setdefault((i, j), {})[k] = c
    delta: Dict[int, Vec] = {k: {} for k in range(d)}
    for (i, j), v in h.m.items():
        for k, c in v.items():
            delta[k][(i, j)] = c
    unit = {i: c for i, c in enumerate(h.counit) if c}
    counit = [h.unit.get(i, ZERO) for i in range(d)]
    S: Dict[int, Vec] = {j: {} for j in range(d)}
    for i, v in h.S.items():
        for j, c in v.items():
            S[j][i] = c
    name = h.name[1:] if h.name.startswith("*") else "*" + h.name
    return FiniteHopfAlgebra([_dual_label(s) for s in h.labels], m, unit, delta, counit, S, name=name)


@dataclass
class QuasitriangularData:
    r_matrix: Vec  # keyed by pairs of basis indices
    r_inverse: Vec


def drinfeld_double(h: FiniteHopfAlgebra):
    """D(H) on the basis alpha^i (x) x_j, index i*d + j, with its standard R-matrix."""
    hd = dual(h)
    d = h.dim

    def idx(i, j):
        return i * d + j

    m: Dict[Tuple[int, int], Vec] = {}
    for a in range(d):
        for b in range(d):
            h3 = h.comul_n(b, 3)
            for c in range(d):
                a3 = hd.comul_n(c, 3)
                # <a'_3, h_1> <a'_1, S^-1(h_3)> alpha a'_2 (x) h_2 h'
                inner: Dict[Tuple[int, int], Fraction] = {}  # (q, b2) -> coefficient
                for (b1, b2, b3), cb in h3.items():
                    sinv = h.antipode_inv({b3: ONE})
                    for (p, q, r), ca in a3.items():
                        if r != b1:
                            continue
                        sp = sinv.get(p)
                        if sp:
                            vaddk(inner, (q, b2), cb * ca * sp)
                for dd in range(d):
                    out: Vec = {}
                    for (q, b2), coef in inner.items():
                        left = hd.m[(a, q)]
                        right = h.m[(b2, dd)]
                        for t, c1 in left.items():
                            for s, c2 in right.items():
                                vaddk(out, idx(t, s), coef * c1 * c2)
                    m[(idx(a, b), idx(c, dd))] = out
    unit = {idx(i, j): ci * cj for i, ci in hd.unit.items() for j, cj in h.unit.items()}
    delta: Dict[int, Vec] = {}
    for a in range(d):
        for b in range(d):
            out: Vec = {}
            for (a1, a2), c1 in hd.delta[a].items():
                for (b1, b2), c2 in h.delta[b].items():
                    vaddk(out, (idx(a2, b1), idx(a1, b2)), c1 * c2)
            delta[idx(a, b)] = out
    counit = [hd.counit[a] * h.counit[b] for a in range(d) for b in range(d)]

    dh = FiniteHopfAlgebra([f"{hd.labels[a]}|{h.labels[b]}" for a in range(d) for b in range(d)],
                           m, unit, delta, counit, {}, name=f"D({h.name})")
    # S(alpha (x) x) = (1 (x) S(x)) (S(alpha) (x) 1)
    S: Dict[int, Vec] = {}
    for a in range(d):
        for b in range(d):
            left = {idx(i, j): ci * cj for i, ci in hd.unit.items() for j, cj in h.S[b].items()}
            right = {idx(i, j): ci * cj for i, ci in hd.S[a].items() for j, cj in h.unit.items()}
            S[idx(a, b)] = dh.mul(left, right)
    dh.S = S
    r: Vec = {}
    for i in range(d):
        left = {idx(a, i): c for a, c in hd.unit.items()}
        right = {idx(i, b): c for b, c in h.unit.items()}
        for x, cx in left.items():
            for y, cy in right.items():
                vaddk(r, (x, y), cx * cy)
    r_inv = elem_antipode_leg(dh, r, 0)
    return dh, QuasitriangularData(r, r_inv)


def trivial_qt(h: FiniteHopfAlgebra) -> QuasitriangularData:
    """R = 1 (x) 1, valid for cocommutative h."""
    one = tensor_unit(h, 2)
    return QuasitriangularData(one, dict(one))


# --- elements of tensor powers ---------------------------------------------------

def tensor_unit(h: FiniteHopfAlgebra, n: int) -> Vec:
    out: Vec = {(): ONE}
    for _ in range(n):
        out = {k + (i,): c * u for k, c in out.items() for i, u in h.unit.items()}
    return out


def tmul(h: FiniteHopfAlgebra, x: Vec, y: Vec) -> Vec:
    """Legwise product in the tensor power algebra."""
    out: Vec = {}
    for a, ca in x.items():
        for b, cb in y.items():
            terms = {(): ca * cb}
            for i, j in zip(a, b):
                prod = h.m[(i, j)]
                if not prod:
                    terms = {}
                    break
                terms = {t + (k,): c * ck for t, c in terms.items() for k, ck in prod.items()}
            for t, c in terms.items():
                vaddk(out, t, c)
    return out


def _embed_exact(h, x, positions, n):
    out: Vec = {}
    pos = list(positions)
    others = [i for i in range(n) if i not in pos]
    for k, c in x.items():
        terms = {(): c}
        for _ in others:
            terms = {t + (i,): cc * u for t, cc in terms.items() for i, u in h.unit.items()}
        for t, cc in terms.items():
            full = [0] * n
            for p, v in zip(pos, k):
                full[p] = v
            for p, v in zip(others, t):
                full[p] = v
            vaddk(out, tuple(full), cc)
    return out


def embed(h: FiniteHopfAlgebra, x: Vec, positions: Sequence[int], n: int) -> Vec:
    return _embed_exact(h, x, positions, n)


def apply_leg(x: Vec, leg: int, fn) -> Vec:
    """Apply a linear map (basis index -> Vec over indices or tuples) to one leg."""
    out: Vec = {}
    for k, c in x.items():
        for img, ci in fn(k[leg]).items():
            img = img if isinstance(img, tuple) else (img,)
            vaddk(out, k[:leg] + img + k[leg + 1:], c * ci)
    return out


def elem_antipode_leg(h: FiniteHopfAlgebra, x: Vec, leg: int) -> Vec:
    return apply_leg(x, leg, lambda i: h.S[i])


def counit_leg(h: FiniteHopfAlgebra, x: Vec, leg: int) -> Vec:
    out: Vec = {}
    for k, c in x.items():
        e = h.counit[k[leg]]
        if e:
            vaddk(out, k[:leg] + k[leg + 1:], c * e)
    return out


def coproduct_leg(h: FiniteHopfAlgebra, x: Vec, leg: int, op=False) -> Vec:
    if op:
        return apply_leg(x, leg, lambda i: {(b, a): c for (a, b), c in h.delta[i].items()})
    return apply_leg(x, leg, lambda i: h.delta[i])


def permute_legs(x: Vec, perm: Sequence[int]) -> Vec:
    """Result leg k carries input leg perm[k]."""
    return {tuple(k[p] for p in perm): c for k, c in x.items()}


def flip(x: Vec) -> Vec:
    return permute_legs(x, (1, 0))


def pairing(x: Vec, functional: Dict) -> Fraction:
    """<functional, x> where functional is keyed like x (dual basis)."""
    return sum((c * functional.get(k, ZERO) for k, c in x.items()), ZERO)


# --- verifiers ------------------------------------------------------------------

@dataclass
class Identity:
    name: str
    passed: bool
    first_failure: Optional[tuple] = None


@dataclass
class Report:
    title: str
    identities: List[Identity] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(i.passed for i in self.identities)

    def add(self, name, failure=None):
        self.identities.append(Identity(name, failure is None, failure))

    def status(self) -> Dict[str, bool]:
        return {i.name: i.passed for i in self.identities}

    def failed(self) -> List[str]:
        return [i.name for i in self.identities if not i.passed]

    def __str__(self):
        lines = [self.title]
        for i in self.identities:
            extra = "" if i.passed else f" first failure at {i.first_failure}"
            lines.append(f"  {i.name}: {'pass' if i.passed else 'FAIL'}{extra}")
        return "\n".join(lines)


def _first(pred, items):
    for it in items:
        if not pred(it):
            return it
    return None


def verify_hopf_axioms(h: FiniteHopfAlgebra) -> Report:
    d = h.dim
    rng = range(d)
    rep = Report(f"Hopf axioms for {h.name}")

    def basis(i):
        return {i: ONE}

    def assoc(t):
        i, j, k = t
        return h.mul(h.m[(i, j)], basis(k)) == h.mul(basis(i), h.m[(j, k)])

    rep.add("associativity", _first(assoc, multi_indices([d, d, d])))

    def unital(i):
        return h.mul(h.unit, basis(i)) == basis(i) == h.mul(basis(i), h.unit)

    rep.add("unit", _first(unital, rng))

    def coassoc(i):
        left = coproduct_leg(h, h.delta[i], 0)
        right = coproduct_leg(h, h.delta[i], 1)
        return left == right

    rep.add("coassociativity", _first(coassoc, rng))

    def counital(i):
        return counit_leg(h, h.delta[i], 0) == {(i,): ONE} == counit_leg(h, h.delta[i], 1)

    rep.add("counit", _first(counital, rng))

    def bialg(t):
        i, j = t
        return h.comul(h.m[(i, j)]) == tmul(h, h.delta[i], h.delta[j])

    fail = _first(bialg, multi_indices([d, d]))
    if fail is None and h.comul(h.unit) != tensor_unit(h, 2):
        fail = ("unit",)
    rep.add("comultiplication_multiplicative", fail)

    def eps_mult(t):
        i, j = t
        return h.eps(h.m[(i, j)]) == h.counit[i] * h.counit[j]

    fail = _first(eps_mult, multi_indices([d, d]))
    if fail is None and h.eps(h.unit) != ONE:
        fail = ("unit",)
    rep.add("counit_multiplicative", fail)

    def antipode(i):
        left: Vec = {}
        right: Vec = {}
        for (a, b), c in h.delta[i].items():
            vadd(left, h.mul(h.S[a], basis(b)), c)
            vadd(right, h.mul(basis(a), h.S[b]), c)
        target = vscale(h.unit, h.counit[i])
        return left == target == right

    rep.add("antipode", _first(antipode, rng))
    return rep


def r_leg(h: FiniteHopfAlgebra, r: Vec, i: int, j: int, n: int) -> Vec:
    """R_{ij} inside the n-fold tensor power (0-based legs)."""
    return embed(h, r, (i, j), n)


def verify_quasitriangular(h: FiniteHopfAlgebra, qt: QuasitriangularData) -> Report:
    d = h.dim
    r, ri = qt.r_matrix, qt.r_inverse
    rep = Report(f"quasitriangular structure on {h.name}")
    one2 = tensor_unit(h, 2)
    ok = tmul(h, r, ri) == one2 and tmul(h, ri, r) == one2
    rep.add("r_inverse", None if ok else ("R R^-1",))

    def intertwine(i):
        dl = h.delta[i]
        return tmul(h, r, dl) == tmul(h, flip(dl), r)

    rep.add("intertwiner", _first(intertwine, range(d)))
    r13 = r_leg(h, r, 0, 2, 3)
    r23 = r_leg(h, r, 1, 2, 3)
    r12 = r_leg(h, r, 0, 1, 3)
    left = coproduct_leg(h, r, 0)
    rep.add("hexagon_1", None if left == tmul(h, r13, r23) else ("(Delta x id)R",))
    left = coproduct_leg(h, r, 1)
    rep.add("hexagon_2", None if left == tmul(h, r13, r12) else ("(id x Delta)R",))
    lhs = tmul(h, tmul(h, r12, r13), r23)
    rhs = tmul(h, tmul(h, r23, r13), r12)
    rep.add("qybe", None if lhs == rhs else ("R12 R13 R23",))
    return rep


def verify_r_properties(h: FiniteHopfAlgebra, qt: QuasitriangularData) -> Report:
    r = qt.r_matrix
    rep = Report("R-matrix identities")
    ss = elem_antipode_leg(h, elem_antipode_leg(h, r, 0), 1)
    rep.add("antipode_invariance", None if ss == r else ("(S x S)R",))
    unit1 = {(i,): c for i, c in h.unit.items()}
    rep.add("counit_left", None if counit_leg(h, r, 0) == unit1 else ("(eps x id)R",))
    rep.add("counit_right", None if counit_leg(h, r, 1) == unit1 else ("(id x eps)R",))
    rep.add("inverse_is_S_id", None if elem_antipode_leg(h, r, 0) == qt.r_inverse else ("(S x id)R",))
    return rep


def drinfeld_map_matrix(h: FiniteHopfAlgebra, qt: QuasitriangularData) -> Dict[int, Vec]:
    """D_Q(alpha^i) = <alpha^i, Q_(2)> Q_(1) with Q = R21 R, as columns."""
    q = tmul(h, flip(qt.r_matrix), qt.r_matrix)
    cols: Dict[int, Vec] = {i: {} for i in range(h.dim)}
    for (a, b), c in q.items():
        vaddk(cols[b], a, c)
    return cols


def is_factorisable(h: FiniteHopfAlgebra, qt: QuasitriangularData) -> bool:
    cols = drinfeld_map_matrix(h, qt)
    try:
        Coordinates([cols[i] for i in range(h.dim)])
    except ValueError:
        return False
    return True


# --- ribbon data and integrals ----------------------------------------------------

@dataclass
class RibbonData:
    drinfeld_u: Vec
    ribbon_nu: Vec
    grouplike_g: Vec
    haar_ell: Optional[Vec]


def haar_solution_space(h: FiniteHopfAlgebra) -> List[Vec]:
    """Basis of {x : h x = x h = eps(h) x for all basis h}."""
    d = h.dim
    cols: List[Vec] = []
    for j in range(d):
        col: Vec = {}
        xj = {j: ONE}
        for i in range(d):
            hi = {i: ONE}
            for side, prod in (("L", h.mul(hi, xj)), ("R", h.mul(xj, hi))):
                for k, c in prod.items():
                    vaddk(col, (side, i, k), c)
                if h.counit[i]:
                    vaddk(col, (side, i, j), -h.counit[i])
        cols.append(col)
    return kernel_vectors(cols, d)


def haar_integral(h: FiniteHopfAlgebra) -> Vec:
    space = haar_solution_space(h)
    if len(space) != 1:
        raise NoHaar(f"integral space has dimension {len(space)}")
    x = space[0]
    e = h.eps(x)
    if not e:
        raise NoHaar("integral cannot be normalised: eps vanishes")
    return vscale(x, 1 / e)


def drinfeld_element(h: FiniteHopfAlgebra, qt: QuasitriangularData) -> Vec:
    """u = m (S x id)(R21) = sum S(R2) R1."""
    u: Vec = {}
    for (a, b), c in qt.r_matrix.items():
        vadd(u, h.mul(h.S[b], {a: ONE}), c)
    return u


def ribbon_data(h: FiniteHopfAlgebra, qt: QuasitriangularData) -> RibbonData:
    if not h.is_semisimple():
        raise NotSemisimple("S^2 is not the identity")
    u = drinfeld_element(h, qt)
    # g = 1 forces nu = u (nu = u^-1 would break nu^2 = u S(u) beyond order-2 twists)
    nu = dict(u)
    g = dict(h.unit)
    return RibbonData(u, nu, g, haar_integral(h))


def verify_ribbon(h: FiniteHopfAlgebra, qt: QuasitriangularData, rd: RibbonData) -> Report:
    rep = Report(f"ribbon data for {h.name}")
    u, nu, g = rd.drinfeld_u, rd.ribbon_nu, rd.grouplike_g
    uinv = h.inverse(u)

    def s2(i):
        return h.antipode(h.S[i]) == h.mul(h.mul(u, {i: ONE}), uinv)

    rep.add("S2_conjugation", _first(s2, range(h.dim)))
    central = _first(lambda i: h.mul(nu, {i: ONE}) == h.mul({i: ONE}, nu), range(h.dim))
    rep.add("nu_central", central)
    ok = h.mul(nu, nu) == h.mul(u, h.antipode(u))
    rep.add("nu_squared", None if ok else ("nu^2",))
    rep.add("nu_antipode", None if h.antipode(nu) == nu else ("S(nu)",))
    rep.add("nu_counit", None if h.eps(nu) == ONE else ("eps(nu)",))
    rinv21 = flip(qt.r_inverse)
    nunu = {(a, b): ca * cb for a, ca in nu.items() for b, cb in nu.items()}
    ok = h.comul(nu) == tmul(h, tmul(h, qt.r_inverse, rinv21), nunu)
    rep.add("nu_coproduct", None if ok else ("Delta(nu)",))
    gg = h.comul(g)
    g2 = {(a, b): ca * cb for a, ca in g.items() for b, cb in g.items()}
    rep.add("grouplike", None if h.mul(uinv, nu) == g and gg == g2 else ("g",))
    ell = rd.haar_ell
    if ell is not None:
        bad = _first(lambda i: h.mul({i: ONE}, ell) == vscale(ell, h.counit[i]) == h.mul(ell, {i: ONE}),
                     range(h.dim))
        if bad is None and h.eps(ell) != ONE:
            bad = ("eps",)
        rep.add("haar", bad)
    return rep


def tensor_power(h: FiniteHopfAlgebra, n: int, labels: Optional[Sequence[str]] = None) -> FiniteHopfAlgebra:
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return h
    labels = list(labels) if labels is not None else [str(i) for i in range(n)]
    d = h.dim
    idx = list(multi_indices([d] * n))
    pos = {t: k for k, t in enumerate(idx)}

    def flat(v: Vec) -> Vec:
        return {pos[t]: c for t, c in v.items()}

    m = {}
    for a in idx:
        for b in idx:
            m[(pos[a], pos[b])] = flat(tmul(h, {a: ONE}, {b: ONE}))
    unit = flat(tensor_unit(h, n))
    delta = {}
    counit = []
    S = {}
    for a in idx:
        # legwise coproduct, then regroup (x1 y1 x2 y2 ...) -> (x..., y...)
        v = {a: ONE}
        for leg in reversed(range(n)):
            v = apply_leg(v, leg, lambda i: h.delta[i])
        out = {}
        for t, c in v.items():
            out[(pos[t[0::2]], pos[t[1::2]])] = c
        delta[pos[a]] = out
        e = ONE
        for i in a:
            e *= h.counit[i]
        counit.append(e)
        sv = {a: ONE}
        for leg in range(n):
            sv = elem_antipode_leg(h, sv, leg)
        S[pos[a]] = flat(sv)
    names = ["(x)".join(h.labels[i] for i in t) for t in idx]
    out = FiniteHopfAlgebra(names, m, unit, delta, counit, S, name=f"{h.name}^{n}")
    out.leg_labels = tuple(labels)
    return out


def _pairs_in_twist_order(n: int):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return sorted(pairs, key=lambda p: (p[0], -p[1]))


def twist_F(h: FiniteHopfAlgebra, qt: QuasitriangularData, n: int, primed=False) -> Vec:
    """F = prod_{i<j} R_{i,n+j} in K^{(x)n} (x) K^{(x)n} (primed: R_{n+i,j})."""
    out = tensor_unit(h, 2 * n)
    for i, j in _pairs_in_twist_order(n):
        legs = (n + i, j) if primed else (i, n + j)
        out = tmul(h, out, embed(h, qt.r_matrix, legs, 2 * n))
    return out


def twist_G(h: FiniteHopfAlgebra, qt: QuasitriangularData, n: int, I, primed=False) -> Vec:
    """G = prod_{i in I} R^-1_{i,n+i} (primed: R^-1_{n+i,i}); I is 0-based."""
    out = tensor_unit(h, 2 * n)
    for i in sorted(I):
        legs = (n + i, i) if primed else (i, n + i)
        out = tmul(h, out, embed(h, qt.r_inverse, legs, 2 * n))
    return out


def twist_G_inverse(h, qt, n, I, primed=False) -> Vec:
    out = tensor_unit(h, 2 * n)
    for i in sorted(I, reverse=True):
        legs = (n + i, i) if primed else (i, n + i)
        out = tmul(h, out, embed(h, qt.r_matrix, legs, 2 * n))
    return out


def block_coproduct(h: FiniteHopfAlgebra, x: Vec, n: int, block: int, nblocks: int, op=False) -> Vec:
    """Apply the (legwise) coproduct of K^{(x)n} to one block of an element of
    (K^{(x)n})^{(x)nblocks}; the result has nblocks+1 blocks."""
    out: Vec = {}
    for k, c in x.items():
        terms = {((), ()): c}
        for leg in range(n):
            i = k[block * n + leg]
            new = {}
            for (l, r), cc in terms.items():
                for (a, b), cd in h.delta[i].items():
                    if op:
                        a, b = b, a
                    key = (l + (a,), r + (b,))
                    new[key] = new.get(key, ZERO) + cc * cd
            terms = {t: v for t, v in new.items() if v}
        pre, post = k[:block * n], k[(block + 1) * n:]
        for (l, r), cc in terms.items():
            vaddk(out, pre + l + r + post, cc)
    return out


def block_counit(h: FiniteHopfAlgebra, x: Vec, n: int, block: int) -> Vec:
    out: Vec = {}
    for k, c in x.items():
        e = c
        for leg in range(n):
            e *= h.counit[k[block * n + leg]]
            if not e:
                break
        if e:
            vaddk(out, k[:block * n] + k[(block + 1) * n:], e)
    return out


def verify_twist(h: FiniteHopfAlgebra, qt: QuasitriangularData, n: int) -> Report:
    """Cocycle and counit identities for F^n as a twist of (K^cop)^{(x)n}."""
    F = twist_F(h, qt, n)
    rep = Report(f"twist F^{n}")
    F12 = {k + u: c * cu for k, c in F.items() for u, cu in tensor_unit(h, n).items()}
    F23 = {u + k: c * cu for k, c in F.items() for u, cu in tensor_unit(h, n).items()}
    lhs = tmul(h, F12, block_coproduct(h, F, n, 0, 2, op=True))
    rhs = tmul(h, F23, block_coproduct(h, F, n, 1, 2, op=True))
    rep.add("cocycle", None if lhs == rhs else ("F12 (Dop x id)F",))
    unit_n = tensor_unit(h, n)
    rep.add("counit_left", None if block_counit(h, F, n, 0) == unit_n else ("(eps x id)F",))
    rep.add("counit_right", None if block_counit(h, F, n, 1) == unit_n else ("(id x eps)F",))
    return rep


def involution_T(h: FiniteHopfAlgebra, rd: RibbonData):
    """(T, T*) with T(k) = g S(k) and T*(alpha) = <alpha_1, g> S(alpha_2), as columns."""
    d = h.dim
    T = {i: h.mul(rd.grouplike_g, h.S[i]) for i in range(d)}
    Tstar: Dict[int, Vec] = {j: {} for j in range(d)}
    for i, v in T.items():
        for j, c in v.items():
            Tstar[j][i] = c
    return T, Tstar


def apply_map(cols: Dict[int, Vec], x: Vec) -> Vec:
    out: Vec = {}
    for i, c in x.items():
        vadd(out, cols[i], c)
    return out


@lru_cache(maxsize=None)
def standard_group(name: str) -> GroupTable:
    return {"Z1": lambda: cyclic_group(1), "Z2": lambda: cyclic_group(2),
            "Z3": lambda: cyclic_group(3), "S3": symmetric_group_3}[name]()
