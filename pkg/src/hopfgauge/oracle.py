"""Brute-force lattice gauge theory for a finite group, used as ground truth.

Connections are tuples in G^E (mixed radix over the edge list); h in G^V acts by
g_e -> h_ta(e) g_e h_st(e)^{-1}. Nothing here touches the Hopf algebra code.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product as cartesian
from typing import Iterator, List, Optional, Tuple

from .graph import CiliatedRibbonGraph, faces
from .hopf import GroupTable, Report

ENUMERATION_LIMIT = 10 ** 7


class TooLarge(ValueError):
    pass


class Mismatch(AssertionError):
    pass


@dataclass
class GroupConnectionSpace:
    group: GroupTable
    graph: CiliatedRibbonGraph

    def __post_init__(self):
        self.edges = list(self.graph.edge_ids)
        self.vertices = list(self.graph.vertices)
        self._vpos = {v: i for i, v in enumerate(self.vertices)}
        self._ends = [(self._vpos[self.graph.st(e)], self._vpos[self.graph.ta(e)]) for e in self.edges]
        n = self.group.order
        if n ** len(self.edges) > ENUMERATION_LIMIT or n ** len(self.vertices) > ENUMERATION_LIMIT:
            raise TooLarge(f"|G|^|E| = {n ** len(self.edges)} exceeds {ENUMERATION_LIMIT}")

    def __len__(self):
        return self.group.order ** len(self.edges)

    def connections(self) -> Iterator[Tuple[int, ...]]:
        return cartesian(range(self.group.order), repeat=len(self.edges))

    def gauge_elements(self) -> Iterator[Tuple[int, ...]]:
        return cartesian(range(self.group.order), repeat=len(self.vertices))

    def act(self, h: Tuple[int, ...], g: Tuple[int, ...]) -> Tuple[int, ...]:
        G = self.group
        return tuple(G.mul(G.mul(h[t], x), G.inverse[h[s]]) for x, (s, t) in zip(g, self._ends))

    def holonomy(self, letters, g: Tuple[int, ...]) -> int:
        """g_{e_n}^{±1} ... g_{e_1}^{±1} for the word e_1 ... e_n."""
        G = self.group
        pos = {e: i for i, e in enumerate(self.edges)}
        out = G.identity
        for e, x in letters:
            y = g[pos[e]] if x > 0 else G.inverse[g[pos[e]]]
            out = G.mul(y, out)
        return out

    def is_flat(self, g: Tuple[int, ...]) -> bool:
        return all(self.holonomy(f.path.letters, g) == self.group.identity for f in faces(self.graph))

    def orbits(self, subset=None) -> List[frozenset]:
        todo = set(subset if subset is not None else self.connections())
        hs = list(self.gauge_elements())
        out = []
        while todo:
            g = todo.pop()
            orbit = {self.act(h, g) for h in hs}
            todo -= orbit
            out.append(frozenset(orbit))
        return out


def gauge_orbit_count(G: GroupTable, graph: CiliatedRibbonGraph) -> int:
    return len(GroupConnectionSpace(G, graph).orbits())


def invariant_dim(G: GroupTable, graph: CiliatedRibbonGraph) -> int:
    """Dimension of the gauge invariant functions, one per orbit."""
    return gauge_orbit_count(G, graph)


def invariant_dim_burnside(G: GroupTable, graph: CiliatedRibbonGraph) -> int:
    """Average number of fixed connections over G^V."""
    sp = GroupConnectionSpace(G, graph)
    conns = list(sp.connections())
    total = 0
    count = 0
    for h in sp.gauge_elements():
        total += sum(1 for g in conns if sp.act(h, g) == g)
        count += 1
    if total % count:
        raise Mismatch("Burnside average is not an integer")
    return total // count


def flat_moduli_dim(G: GroupTable, graph: CiliatedRibbonGraph) -> int:
    sp = GroupConnectionSpace(G, graph)
    return len(sp.orbits([g for g in sp.connections() if sp.is_flat(g)]))


def compare_with_hopf(G: GroupTable, graph: CiliatedRibbonGraph, moduli: bool = True,
                      samples: int = 200, seed: int = 0, strict: bool = False) -> Report:
    """Hopf pipeline with K = F[G] against the enumeration.

    Also checks that 𝒜* is the commutative algebra of functions on G^E, i.e.
    δ_g δ_h = δ_{g,h} δ_g, on all generator pairs and on sampled basis pairs.
    """
    from .gauge import build_function_algebra
    from .holonomy import moduli_algebra
    from .hopf import group_algebra, trivial_qt

    K = group_algebra(G)
    fa = build_function_algebra(graph, K, trivial_qt(K))
    rep = Report(f"group oracle vs Hopf pipeline, |G| = {G.order}, {graph!r}")
    want = invariant_dim(G, graph)
    got = len(fa.invariant_basis())
    rep.add("dim A*_inv = orbit count", None if got == want else (got, want))
    if moduli:
        want = flat_moduli_dim(G, graph)
        got = moduli_algebra(fa).dim
        rep.add("dim M = flat orbit count", None if got == want else (got, want))
    basis = fa.basis()
    rng = random.Random(seed)
    pairs = [(x, y) for x in basis for y in basis if sum(a != b for a, b in zip(x, y)) <= 1]
    pairs = pairs[:samples] + [(rng.choice(basis), rng.choice(basis)) for _ in range(samples)]
    bad: Optional[tuple] = None
    for x, y in pairs:
        expect = {x: 1} if x == y else {}
        if fa.mul_basis(x, y) != expect or fa.mul_basis(y, x) != expect:
            bad = (x, y)
            break
    rep.add("pointwise product", bad)
    if strict and not rep.passed:
        raise Mismatch(str(rep))
    return rep
