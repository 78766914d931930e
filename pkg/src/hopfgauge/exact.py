"""Exact rational scalars, sparse tensors and echelon-form linear algebra."""
from __future__ import annotations

from fractions import Fraction
from itertools import product as cartesian
from typing import Callable, Dict, Hashable, Iterable, List, Sequence, Tuple

Scalar = Fraction
Vec = Dict[Hashable, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


class AxisClash(ValueError):
    pass


class NotClosed(ArithmeticError):
    def __init__(self, i, j, residual):
        super().__init__(f"product of basis vectors {i} and {j} leaves the span")
        self.i = i
        self.j = j
        self.residual = residual


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# --- dict vectors -----------------------------------------------------------

def vadd(acc: Vec, v: Vec, c=ONE) -> Vec:
    """acc += c*v in place, dropping zeros."""
    for k, x in v.items():
        y = acc.get(k, ZERO) + c * x
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)
    return acc


def vaddk(acc: Vec, k, x) -> None:
    y = acc.get(k, ZERO) + x
    if y:
        acc[k] = y
    else:
        acc.pop(k, None)


def vscale(v: Vec, c) -> Vec:
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def vsum(terms: Iterable[Tuple[Fraction, Vec]]) -> Vec:
    acc: Vec = {}
    for c, v in terms:
        vadd(acc, v, c)
    return acc


def clean(v: Vec) -> Vec:
    return {k: frac(x) for k, x in v.items() if x}


# --- sparse tensors -----------------------------------------------------------

class SparseTensor:
    """Entries keyed by index tuples in the order of ``shape``."""

    __slots__ = ("shape", "entries")

    def __init__(self, shape: Sequence[Tuple[str, int]], entries=None):
        labels = [lab for lab, _ in shape]
        if len(set(labels)) != len(labels):
            raise AxisClash(f"repeated axis labels {labels}")
        self.shape = tuple((lab, int(d)) for lab, d in shape)
        self.entries: Dict[Tuple[int, ...], Fraction] = {}
        for key, x in (entries or {}).items():
            key = tuple(key) if isinstance(key, (tuple, list)) else (key,)
            if len(key) != len(self.shape):
                raise ValueError(f"index {key} does not match shape {self.shape}")
            for i, (lab, d) in zip(key, self.shape):
                if not 0 <= i < d:
                    raise IndexError(f"index {i} out of range on axis {lab}")
            x = frac(x)
            if x:
                self.entries[key] = x

    @property
    def labels(self):
        return tuple(lab for lab, _ in self.shape)

    @property
    def dims(self):
        return tuple(d for _, d in self.shape)

    def multi_index(self, key):
        return tuple(zip(self.labels, key))

    def __getitem__(self, key):
        key = tuple(key) if isinstance(key, (tuple, list)) else (key,)
        return self.entries.get(key, ZERO)

    def __eq__(self, other):
        return (isinstance(other, SparseTensor) and self.shape == other.shape
                and self.entries == other.entries)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return SparseTensor(self.shape, vadd(dict(self.entries), other.entries))

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return SparseTensor(self.shape, vscale(self.entries, frac(c)))

    def __repr__(self):
        return f"SparseTensor({self.shape}, {len(self.entries)} entries)"

    def permute(self, labels):
        """Reorder axes to the given label order."""
        pos = [self.labels.index(lab) for lab in labels]
        shape = [self.shape[p] for p in pos]
        return SparseTensor(shape, {tuple(k[p] for p in pos): x for k, x in self.entries.items()})

    def canonical(self):
        """Axes sorted by label."""
        return self.permute(sorted(self.labels))

    def column(self, j) -> Vec:
        return {k[0]: x for k, x in self.entries.items() if k[1] == j}


def tensor_product(a: SparseTensor, b: SparseTensor) -> SparseTensor:
    clash = set(a.labels) & set(b.labels)
    if clash:
        raise AxisClash(f"axis labels {sorted(clash)} appear on both factors")
    entries = {ka + kb: xa * xb for ka, xa in a.entries.items() for kb, xb in b.entries.items()}
    return SparseTensor(a.shape + b.shape, entries)


def matrix(rows: Sequence[Sequence], row_label="row", col_label="col") -> SparseTensor:
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    entries = {(i, j): x for i, r in enumerate(rows) for j, x in enumerate(r) if x}
    return SparseTensor([(row_label, nrows), (col_label, ncols)], entries)


def vector(values: Sequence, label="i") -> SparseTensor:
    return SparseTensor([(label, len(values))], {(i,): x for i, x in enumerate(values) if x})


# --- echelon forms ------------------------------------------------------------

def rref(vectors: Iterable[Vec], order=None) -> List[Vec]:
    """Reduced row echelon basis of span(vectors).

    Pivots are the least keys in ``order`` (default: sorted keys); each row
    has pivot coefficient 1 and the other rows vanish on its pivot.
    """
    rows = _Echelon(order)
    for v in vectors:
        rows.insert(v)
    return rows.basis()


class _Echelon:
    def __init__(self, order=None, track=False):
        self.order = order
        self.rank_of = None if order is None else {k: i for i, k in enumerate(order)}
        self.rows: Dict[Hashable, Vec] = {}  # pivot -> row
        self.track = track
        self.combo: Dict[Hashable, Vec] = {}  # pivot -> coefficients in inserted vectors
        self.count = 0

    def _key(self, k):
        return self.rank_of[k] if self.rank_of is not None else k

    def reduce(self, v: Vec, combo: Vec = None):
        v = {k: x for k, x in v.items() if x}
        # repeatedly eliminate known pivots
        changed = True
        while changed:
            changed = False
            for p in [k for k in v if k in self.rows]:
                c = v.get(p)
                if c:
                    vadd(v, self.rows[p], -c)
                    if combo is not None:
                        vadd(combo, self.combo[p], -c)
                    changed = True
        return v

    def insert(self, v: Vec) -> bool:
        idx = self.count
        self.count += 1
        combo = {idx: ONE} if self.track else None
        r = self.reduce(v, combo)
        if not r:
            return False
        p = min(r, key=self._key)
        c = r[p]
        r = vscale(r, 1 / c)
        if combo is not None:
            combo = vscale(combo, 1 / c)
        for q, row in self.rows.items():
            d = row.get(p)
            if d:
                vadd(row, r, -d)
                if self.track:
                    vadd(self.combo[q], combo, -d)
        self.rows[p] = r
        if self.track:
            self.combo[p] = combo
        return True

    def basis(self) -> List[Vec]:
        return [self.rows[p] for p in sorted(self.rows, key=self._key)]


def span_rank(vectors: Iterable[Vec]) -> int:
    return len(rref(vectors))


def same_span(a: Iterable[Vec], b: Iterable[Vec]) -> bool:
    return rref(a) == rref(b)


def _as_matrix(m) -> Tuple[List[Vec], int, int]:
    """Columns of a 2-axis SparseTensor, or a list of column vectors."""
    if isinstance(m, SparseTensor):
        if len(m.shape) != 2:
            raise ValueError("expected a 2-axis tensor")
        nrows, ncols = m.dims
        cols: List[Vec] = [{} for _ in range(ncols)]
        for (i, j), x in m.entries.items():
            cols[j][i] = x
        return cols, nrows, ncols
    raise TypeError("expected SparseTensor")


def image_basis(m: SparseTensor) -> List[SparseTensor]:
    cols, nrows, _ = _as_matrix(m)
    lab = m.shape[0]
    return [SparseTensor([lab], {(i,): x for i, x in v.items()}) for v in rref(cols)]


def kernel_vectors(cols: Sequence[Vec], ncols: int) -> List[Vec]:
    """Null space of the matrix with the given columns, as reduced vectors."""
    # row-reduce the rows of the matrix, then read off free variables
    rows: Dict[Hashable, Vec] = {}
    for j, col in enumerate(cols):
        for i, x in col.items():
            rows.setdefault(i, {})[j] = x
    ech = _Echelon(list(range(ncols)))
    for r in rows.values():
        ech.insert(r)
    pivots = set(ech.rows)
    out = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = {free: ONE}
        for p, row in ech.rows.items():
            c = row.get(free)
            if c:
                v[p] = -c
        out.append(v)
    return rref(out, list(range(ncols)))


def kernel_basis(m: SparseTensor) -> List[SparseTensor]:
    cols, _, ncols = _as_matrix(m)
    lab = m.shape[1]
    return [SparseTensor([lab], {(i,): x for i, x in v.items()}) for v in kernel_vectors(cols, ncols)]


def rank(m: SparseTensor) -> int:
    return len(image_basis(m))


class Coordinates:
    """Expresses vectors in a fixed, linearly independent basis."""

    def __init__(self, basis: Sequence[Vec]):
        self.ech = _Echelon(track=True)
        for v in basis:
            if not self.ech.insert(v):
                raise ValueError("basis is linearly dependent")
        self.n = len(basis)

    def solve(self, v: Vec):
        """Return (coordinates, residual); residual is {} iff v is in the span."""
        combo: Vec = {}
        r = self.ech.reduce(v, combo)
        return {i: -c for i, c in combo.items()} if not r else None, r

    def coords(self, v: Vec) -> Vec:
        c, r = self.solve(v)
        if r:
            raise ValueError("vector outside span")
        return c

    def contains(self, v: Vec) -> bool:
        return not self.solve(v)[1]


def restrict_algebra(mult: Callable[[Vec, Vec], Vec], basis: Sequence[Vec]):
    """Structure constants of the span of ``basis`` under ``mult``.

    Returns {(i, j): {k: c}} with basis_i * basis_j = sum_k c basis_k.
    """
    co = Coordinates(basis)
    out = {}
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            c, residual = co.solve(mult(x, y))
            if residual:
                raise NotClosed(i, j, residual)
            out[(i, j)] = c
    return out


def determinant(rows: List[List[Fraction]]) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    a = [[frac(x) for x in r] for r in rows]
    n = len(a)
    det = ONE
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return ZERO
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] * inv
            if f:
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return det


def multi_indices(dims: Sequence[int]):
    """Row-major enumeration of index tuples."""
    return cartesian(*[range(d) for d in dims])
