"""Ciliated ribbon graphs, path words, faces and graph moves."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

End = Tuple[str, str]  # ("s" | "t", edge id)
Letter = Tuple[str, int]  # (edge id, +1 | -1)


class DanglingEnd(ValueError):
    pass


class DuplicateEnd(ValueError):
    pass


class NotComposable(ValueError):
    pass


class MovePreconditionViolated(ValueError):
    pass


class Disconnected(ValueError):
    pass


def s(e: str) -> End:
    return ("s", e)


def t(e: str) -> End:
    return ("t", e)


def end_str(end: End) -> str:
    return f"{end[0]}({end[1]})"


def departure(letter: Letter) -> End:
    e, x = letter
    return s(e) if x > 0 else t(e)


def arrival(letter: Letter) -> End:
    e, x = letter
    return t(e) if x > 0 else s(e)


class CiliatedRibbonGraph:
    """Directed multigraph with a linear order (least first) of edge ends at each vertex."""

    def __init__(self, vertices: Sequence[str], edges: Sequence[Tuple[str, str, str]],
                 end_order: Dict[str, Sequence[End]]):
        self.vertices: Tuple[str, ...] = tuple(vertices)
        self.edge_ids: Tuple[str, ...] = tuple(e for e, _, _ in edges)
        self.edges: Dict[str, Tuple[str, str]] = {e: (a, b) for e, a, b in edges}
        self.end_order: Dict[str, Tuple[End, ...]] = {v: tuple(tuple(x) for x in end_order.get(v, ()))
                                                      for v in self.vertices}
        self._validate()
        self._where = {end: (v, i) for v, ends in self.end_order.items() for i, end in enumerate(ends)}

    def _validate(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("repeated vertex id")
        if len(self.edges) != len(self.edge_ids):
            raise ValueError("repeated edge id")
        for v in self.end_order:
            if v not in self.vertices:
                raise ValueError(f"unknown vertex {v}")
        seen = {}
        for v, ends in self.end_order.items():
            for end in ends:
                kind, e = end
                if e not in self.edges or kind not in ("s", "t"):
                    raise DanglingEnd(f"{end_str(end)} at {v} refers to no edge")
                if end in seen:
                    raise DuplicateEnd(f"{end_str(end)} listed at {seen[end]} and {v}")
                seen[end] = v
        for e, (a, b) in self.edges.items():
            for end, v in ((s(e), a), (t(e), b)):
                if v not in self.vertices:
                    raise ValueError(f"edge {e} uses unknown vertex {v}")
                if end not in seen:
                    raise DanglingEnd(f"{end_str(end)} missing from the order at {v}")
                if seen[end] != v:
                    raise DanglingEnd(f"{end_str(end)} listed at {seen[end]}, expected {v}")
        for v in self.vertices:
            if not self.end_order[v]:
                raise ValueError(f"vertex {v} has no edge ends")

    def __eq__(self, other):
        return (isinstance(other, CiliatedRibbonGraph) and self.vertices == other.vertices
                and self.edge_ids == other.edge_ids and self.edges == other.edges
                and self.end_order == other.end_order)

    def __repr__(self):
        return f"CiliatedRibbonGraph(V={len(self.vertices)}, E={len(self.edges)})"

    def st(self, e: str) -> str:
        return self.edges[e][0]

    def ta(self, e: str) -> str:
        return self.edges[e][1]

    def is_loop(self, e: str) -> bool:
        return self.st(e) == self.ta(e)

    def vertex_of(self, end: End) -> str:
        return self._where[end][0]

    def position(self, end: End) -> int:
        return self._where[end][1]

    def valence(self, v: str) -> int:
        return len(self.end_order[v])

    def less(self, a: End, b: End) -> bool:
        va, ia = self._where[a]
        vb, ib = self._where[b]
        if va != vb:
            raise ValueError("ends at different vertices are not ordered")
        return ia < ib

    def all_ends(self) -> List[End]:
        """Ends in the global order: vertex by vertex, each in its linear order."""
        return [end for v in self.vertices for end in self.end_order[v]]

    def letter_endpoints(self, letter: Letter) -> Tuple[str, str]:
        e, x = letter
        a, b = self.edges[e]
        return (a, b) if x > 0 else (b, a)

    def connected(self) -> bool:
        if not self.vertices:
            return True
        adj = {v: set() for v in self.vertices}
        for a, b in self.edges.values():
            adj[a].add(b)
            adj[b].add(a)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def with_order(self, v: str, order: Sequence[End]) -> "CiliatedRibbonGraph":
        orders = dict(self.end_order)
        orders[v] = tuple(order)
        return CiliatedRibbonGraph(self.vertices, self.edge_list(), orders)

    def edge_list(self) -> List[Tuple[str, str, str]]:
        return [(e, *self.edges[e]) for e in self.edge_ids]

    def rotate_cilium(self, v: str, steps: int = 1) -> "CiliatedRibbonGraph":
        """Move the cilium at v over ``steps`` ends (positive: the last end becomes least)."""
        ends = list(self.end_order[v])
        k = steps % len(ends)
        return self.with_order(v, ends[len(ends) - k:] + ends[:len(ends) - k])


# --- paths ----------------------------------------------------------------------

@dataclass(frozen=True)
class PathWord:
    """Letters in traversal order (first traversed first); str() uses composition order."""

    letters: Tuple[Letter, ...]
    start: str
    target: str

    @staticmethod
    def empty(v: str) -> "PathWord":
        return PathWord((), v, v)

    @property
    def is_empty(self) -> bool:
        return not self.letters

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return f"empty({self.start})"
        return "*".join(e if x > 0 else f"{e}^-1" for e, x in reversed(self.letters))

    @property
    def closed(self) -> bool:
        return self.start == self.target


def word(g: CiliatedRibbonGraph, letters: Sequence[Letter], start: Optional[str] = None) -> PathWord:
    """Build and reduce a path word, checking composability."""
    letters = [(e, int(x)) for e, x in letters]
    if not letters:
        if start is None:
            raise NotComposable("empty word needs a base vertex")
        return PathWord.empty(start)
    for e, x in letters:
        if e not in g.edges or x not in (1, -1):
            raise NotComposable(f"bad letter {(e, x)}")
    first = g.letter_endpoints(letters[0])[0]
    if start is not None and start != first:
        raise NotComposable("word does not start at the given vertex")
    here = first
    for letter in letters:
        a, b = g.letter_endpoints(letter)
        if a != here:
            raise NotComposable(f"letter {letter} does not start at {here}")
        here = b
    return reduce_word(PathWord(tuple(letters), first, here))


def reduce_word(p: PathWord) -> PathWord:
    out: List[Letter] = []
    for e, x in p.letters:
        if out and out[-1] == (e, -x):
            out.pop()
        else:
            out.append((e, x))
    return PathWord(tuple(out), p.start, p.target)


def compose(p: PathWord, q: PathWord) -> PathWord:
    """p o q: traverse q first, then p."""
    if q.target != p.start:
        raise NotComposable(f"{p} cannot follow {q}")
    return reduce_word(PathWord(q.letters + p.letters, q.start, p.target))


def invert(p: PathWord) -> PathWord:
    return PathWord(tuple((e, -x) for e, x in reversed(p.letters)), p.target, p.start)


def parse_word(g: CiliatedRibbonGraph, text: str) -> PathWord:
    """Parse composition notation such as ``b^-1*a`` (a traversed first)."""
    text = text.strip()
    if text.startswith("empty(") and text.endswith(")"):
        v = text[6:-1]
        if v not in g.vertices:
            raise NotComposable(f"unknown vertex {v}")
        return PathWord.empty(v)
    parts = [p.strip() for p in text.replace("∘", "*").split("*") if p.strip()]
    letters = []
    for part in reversed(parts):
        if part.endswith("^-1"):
            letters.append((part[:-3], -1))
        else:
            letters.append((part, 1))
    return word(g, letters)


def cyclic_core(p: PathWord) -> Tuple[PathWord, PathWord]:
    """Split a closed reduced word as r o q o r^-1; returns (q, r)."""
    if not p.closed:
        raise ValueError("path is not closed")
    ls = list(p.letters)
    k = 0
    while len(ls) - 2 * k >= 2 and ls[k] == (ls[-1 - k][0], -ls[-1 - k][1]):
        k += 1
    core = tuple(ls[k:len(ls) - k])
    prefix = tuple(ls[:k])
    return core, prefix


def closed_path_order(g: CiliatedRibbonGraph, p: PathWord) -> str:
    """'t<s' or 's<t' for a closed path, read off its cyclically reduced core."""
    core, _ = cyclic_core(p)
    if not core:
        raise ValueError("path has an empty cyclic core; the end order is undefined")
    dep, arr = departure(core[0]), arrival(core[-1])
    return "t<s" if g.less(arr, dep) else "s<t"


# --- faces ----------------------------------------------------------------------

def _letter_key(letter: Letter):
    return (letter[0], letter[1])


def canonical_rotation(letters: Sequence[Letter]) -> Tuple[Letter, ...]:
    n = len(letters)
    rots = [tuple(letters[i:]) + tuple(letters[:i]) for i in range(n)]
    return min(rots, key=lambda r: [_letter_key(x) for x in r])


@dataclass(frozen=True)
class Face:
    path: PathWord

    @property
    def valence(self) -> int:
        return len(self.path)

    def __str__(self):
        return str(self.path)


def next_letter(g: CiliatedRibbonGraph, letter: Letter) -> Letter:
    """Maximal left turn: depart through the end cyclically preceding the arrival end."""
    end = arrival(letter)
    v, i = g.vertex_of(end), g.position(end)
    ends = g.end_order[v]
    kind, e = ends[(i - 1) % len(ends)]
    return (e, 1) if kind == "s" else (e, -1)


def face_paths(g: CiliatedRibbonGraph) -> List[Tuple[Letter, ...]]:
    seen = set()
    out = []
    for e in g.edge_ids:
        for x in (1, -1):
            if (e, x) in seen:
                continue
            cyc = []
            cur = (e, x)
            while cur not in seen:
                seen.add(cur)
                cyc.append(cur)
                cur = next_letter(g, cur)
            out.append(tuple(cyc))
    return out


def faces(g: CiliatedRibbonGraph) -> List[Face]:
    out = []
    for cyc in face_paths(g):
        rot = canonical_rotation(cyc)
        v = g.letter_endpoints(rot[0])[0]
        out.append(Face(PathWord(rot, v, v)))
    return sorted(out, key=lambda f: [_letter_key(x) for x in f.path.letters])


def is_face_path(g: CiliatedRibbonGraph, p: PathWord) -> bool:
    if p.is_empty or not p.closed:
        return False
    ls = p.letters
    if len(set(ls)) != len(ls):
        return False
    return all(next_letter(g, ls[i]) == ls[(i + 1) % len(ls)] for i in range(len(ls)))


def compatible_with_ciliation(g: CiliatedRibbonGraph, f) -> bool:
    """s(e_{i+1}) < t(e_i) at every vertex of the closed path, including the wrap-around."""
    p = f.path if isinstance(f, Face) else f
    if p.is_empty or not p.closed:
        return False
    ls = p.letters
    return all(g.less(departure(ls[(i + 1) % len(ls)]), arrival(ls[i])) for i in range(len(ls)))


def traverses_cilium(g: CiliatedRibbonGraph, p: PathWord) -> bool:
    """True if some interior vertex of p is passed with departure end above arrival end."""
    ls = p.letters
    return any(not g.less(departure(ls[i + 1]), arrival(ls[i])) for i in range(len(ls) - 1))


@dataclass(frozen=True)
class SurfaceData:
    euler_characteristic: int
    genus: int
    boundary_count: int


def surface_data(g: CiliatedRibbonGraph) -> SurfaceData:
    if not g.connected():
        raise Disconnected("graph is not connected")
    nf = len(face_paths(g))
    chi = len(g.vertices) - len(g.edges) + nf
    return SurfaceData(chi, (2 - chi) // 2, nf)


# --- subdivision ------------------------------------------------------------------

def mid(e: str) -> str:
    return f"m({e})"


def sub_edge(end: End) -> str:
    """Name of the edge of the subdivision carrying a given end."""
    return end_str(end)


def edge_subdivision(g: CiliatedRibbonGraph):
    """Return (subdivided graph, functor e -> t(e) o s(e))."""
    vertices = list(g.vertices) + [mid(e) for e in g.edge_ids]
    edges = []
    for e in g.edge_ids:
        a, b = g.edges[e]
        edges.append((sub_edge(s(e)), a, mid(e)))
        edges.append((sub_edge(t(e)), mid(e), b))
    orders: Dict[str, List[End]] = {}
    for v in g.vertices:
        orders[v] = [s(sub_edge(end)) if end[0] == "s" else t(sub_edge(end)) for end in g.end_order[v]]
    for e in g.edge_ids:
        # incoming end least at the new bivalent vertex
        orders[mid(e)] = [t(sub_edge(s(e))), s(sub_edge(t(e)))]
    gc = CiliatedRibbonGraph(vertices, edges, orders)
    functor = {e: PathWord(((sub_edge(s(e)), 1), (sub_edge(t(e)), 1)), g.st(e), g.ta(e)) for e in g.edge_ids}
    return gc, functor


def apply_functor(target: CiliatedRibbonGraph, assignment: Dict[str, PathWord], p: PathWord,
                  vertex_map: Dict[str, str]) -> PathWord:
    """Image of a word under an edge assignment (edges of the source -> words in target)."""
    if p.is_empty:
        return PathWord.empty(vertex_map[p.start])
    letters: List[Letter] = []
    for e, x in p.letters:
        img = assignment[e]
        letters.extend(img.letters if x > 0 else invert(img).letters)
    start = vertex_map[p.start]
    end = vertex_map[p.target]
    return reduce_word(PathWord(tuple(letters), start, end))


def subdivide_word(g: CiliatedRibbonGraph, p: PathWord) -> PathWord:
    _, functor = edge_subdivision(g)
    return apply_functor(None, functor, p, {v: v for v in g.vertices})


# --- moves ------------------------------------------------------------------------

@dataclass
class GraphMoveResult:
    kind: str
    source: CiliatedRibbonGraph
    graph: CiliatedRibbonGraph
    vertex_map: Dict[str, str]
    edge_map: Dict[str, PathWord]          # e' -> word in the source graph
    end_map: Dict[str, PathWord]           # edge of the subdivided result -> word in subdivided source
    params: dict = field(default_factory=dict)

    def check_square(self) -> bool:
        """F_o(t(e') o s(e')) equals the subdivision of F(e') for every edge e'."""
        gsub, functor = edge_subdivision(self.source)
        for e2 in self.graph.edge_ids:
            ps = self.end_map[sub_edge(s(e2))]
            pt = self.end_map[sub_edge(t(e2))]
            lhs = reduce_word(PathWord(ps.letters + pt.letters, ps.start, pt.target))
            vmap = {v: v for v in self.source.vertices}
            rhs = apply_functor(gsub, functor, self.edge_map[e2], vmap)
            if lhs.letters != rhs.letters:
                return False
            if lhs.letters == () and ps.start != rhs.start:
                return False
            if self.edge_map[e2].start != self.vertex_map[self.graph.st(e2)]:
                return False
            if self.edge_map[e2].target != self.vertex_map[self.graph.ta(e2)]:
                return False
        return True


def _pw(letters, start, target) -> PathWord:
    return reduce_word(PathWord(tuple(letters), start, target))


def _identity_maps(g: CiliatedRibbonGraph, skip=()):
    edge_map = {}
    end_map = {}
    for f in g.edge_ids:
        if f in skip:
            continue
        a, b = g.edges[f]
        edge_map[f] = PathWord(((f, 1),), a, b)
        end_map[sub_edge(s(f))] = PathWord(((sub_edge(s(f)), 1),), a, mid(f))
        end_map[sub_edge(t(f))] = PathWord(((sub_edge(t(f)), 1),), mid(f), b)
    return edge_map, end_map


def _drop_empty(vertices, orders):
    keep = [v for v in vertices if orders.get(v)]
    return keep, {v: orders[v] for v in keep}


def move_delete(g: CiliatedRibbonGraph, e: str) -> GraphMoveResult:
    if e not in g.edges:
        raise MovePreconditionViolated(f"delete: no edge {e}")
    orders = {v: [x for x in ends if x[1] != e] for v, ends in g.end_order.items()}
    vertices, orders = _drop_empty(g.vertices, orders)
    edges = [x for x in g.edge_list() if x[0] != e]
    g2 = CiliatedRibbonGraph(vertices, edges, orders)
    edge_map, end_map = _identity_maps(g, skip=(e,))
    return GraphMoveResult("delete", g, g2, {v: v for v in vertices}, edge_map, end_map, {"edge": e})


def _contract(g: CiliatedRibbonGraph, e: str, toward: str) -> GraphMoveResult:
    if e not in g.edges:
        raise MovePreconditionViolated(f"contract: no edge {e}")
    if g.is_loop(e):
        raise MovePreconditionViolated(f"contract: edge {e} is a loop")
    u, w = g.edges[e]
    if toward == "start":
        keep, gone, keep_end, gone_end = u, w, s(e), t(e)
    else:
        keep, gone, keep_end, gone_end = w, u, t(e), s(e)
    gone_ends = list(g.end_order[gone])
    i = gone_ends.index(gone_end)
    moved = gone_ends[i + 1:] + gone_ends[:i]  # cyclic order starting just after the contracted end
    orders = {}
    for v in g.vertices:
        if v == gone:
            continue
        ends = list(g.end_order[v])
        if v == keep:
            j = ends.index(keep_end)
            ends = ends[:j] + moved + ends[j + 1:]
        orders[v] = ends
    vertices = [v for v in g.vertices if v != gone]
    edges = []
    for f in g.edge_ids:
        if f == e:
            continue
        a, b = g.edges[f]
        edges.append((f, keep if a == gone else a, keep if b == gone else b))
    g2 = CiliatedRibbonGraph(vertices, edges, orders)
    vmap = {v: v for v in vertices}
    se, te = sub_edge(s(e)), sub_edge(t(e))
    edge_map = {}
    end_map = {}
    for f in g.edge_ids:
        if f == e:
            continue
        a, b = g.edges[f]
        a2, b2 = (keep if a == gone else a), (keep if b == gone else b)
        pre: List[Letter] = []
        post: List[Letter] = []
        spre: List[Letter] = []
        tpost: List[Letter] = []
        if toward == "start":
            if a == gone:
                pre = [(e, 1)]
                spre = [(se, 1), (te, 1)]
            if b == gone:
                post = [(e, -1)]
                tpost = [(te, -1), (se, -1)]
        else:
            if a == gone:
                pre = [(e, -1)]
                spre = [(te, -1), (se, -1)]
            if b == gone:
                post = [(e, 1)]
                tpost = [(se, 1), (te, 1)]
        edge_map[f] = _pw(pre + [(f, 1)] + post, a2, b2)
        end_map[sub_edge(s(f))] = _pw(spre + [(sub_edge(s(f)), 1)], a2, mid(f))
        end_map[sub_edge(t(f))] = _pw([(sub_edge(t(f)), 1)] + tpost, mid(f), b2)
    kind = "contract-start" if toward == "start" else "contract-target"
    return GraphMoveResult(kind, g, g2, vmap, edge_map, end_map, {"edge": e})


def move_contract_start(g: CiliatedRibbonGraph, e: str) -> GraphMoveResult:
    return _contract(g, e, "start")


def move_contract_target(g: CiliatedRibbonGraph, e: str) -> GraphMoveResult:
    return _contract(g, e, "target")


def contraction_left_inverse(res: GraphMoveResult) -> Dict[str, PathWord]:
    """Assignment on edges of the source sending the contracted edge to the empty path."""
    g, g2 = res.source, res.graph
    e = res.params["edge"]
    keep = g.st(e) if res.kind == "contract-start" else g.ta(e)
    out = {f: PathWord(((f, 1),), g2.st(f), g2.ta(f)) for f in g2.edge_ids}
    out[e] = PathWord.empty(keep)
    return out


def move_add_loop(g: CiliatedRibbonGraph, v: str, position: int, name: Optional[str] = None) -> GraphMoveResult:
    if v not in g.vertices:
        raise MovePreconditionViolated(f"add-loop: no vertex {v}")
    ends = list(g.end_order[v])
    if not 0 <= position <= len(ends):
        raise MovePreconditionViolated(f"add-loop: position {position} outside 0..{len(ends)}")
    name = name or _fresh(g, "l")
    if name in g.edges:
        raise MovePreconditionViolated(f"add-loop: edge {name} exists")
    orders = dict(g.end_order)
    orders[v] = tuple(ends[:position] + [t(name), s(name)] + ends[position:])
    g2 = CiliatedRibbonGraph(g.vertices, g.edge_list() + [(name, v, v)], orders)
    edge_map, end_map = _identity_maps(g)
    edge_map[name] = PathWord.empty(v)
    end_map[sub_edge(s(name))] = PathWord.empty(v)
    end_map[sub_edge(t(name))] = PathWord.empty(v)
    return GraphMoveResult("add-loop", g, g2, {x: x for x in g.vertices}, edge_map, end_map,
                           {"vertex": v, "position": position, "edge": name})


def move_detach(g: CiliatedRibbonGraph, e1: str, e2: str, name: Optional[str] = None) -> GraphMoveResult:
    for e in (e1, e2):
        if e not in g.edges:
            raise MovePreconditionViolated(f"detach: no edge {e}")
    if e1 == e2:
        raise MovePreconditionViolated("detach: edges must differ")
    v = g.ta(e1)
    if g.st(e2) != v:
        raise MovePreconditionViolated("detach: need st(e2) = ta(e1)")
    if g.valence(v) < 3:
        raise MovePreconditionViolated(f"detach: vertex {v} has valence < 3")
    if abs(g.position(t(e1)) - g.position(s(e2))) != 1:
        raise MovePreconditionViolated("detach: t(e1) and s(e2) are not adjacent")
    name = name or f"{e1}_{e2}"
    if name in g.edges:
        raise MovePreconditionViolated(f"detach: edge {name} exists")
    orders = {}
    for x in g.vertices:
        ends = []
        for end in g.end_order[x]:
            if end in (t(e1), s(e2)):
                continue
            if end == s(e1):
                ends.append(s(name))
            elif end == t(e2):
                ends.append(t(name))
            else:
                ends.append(end)
        orders[x] = ends
    edges = []
    for f in g.edge_ids:
        if f == e1:
            edges.append((name, g.st(e1), g.ta(e2)))
        elif f != e2:
            edges.append((f, *g.edges[f]))
    g2 = CiliatedRibbonGraph(g.vertices, edges, orders)
    edge_map, end_map = _identity_maps(g, skip=(e1, e2))
    a, b = g.st(e1), g.ta(e2)
    edge_map[name] = _pw([(e1, 1), (e2, 1)], a, b)
    end_map[sub_edge(s(name))] = _pw([(sub_edge(s(e1)), 1), (sub_edge(t(e1)), 1), (sub_edge(s(e2)), 1)],
                                     a, mid(e2))
    end_map[sub_edge(t(name))] = _pw([(sub_edge(t(e2)), 1)], mid(e2), b)
    return GraphMoveResult("detach", g, g2, {x: x for x in g.vertices}, edge_map, end_map,
                           {"edges": (e1, e2), "edge": name})


def move_double(g: CiliatedRibbonGraph, e: str, name: Optional[str] = None) -> GraphMoveResult:
    """Double e into e' (keeps the name e) and e'' (default e + "'")."""
    if e not in g.edges:
        raise MovePreconditionViolated(f"double: no edge {e}")
    name = name or e + "'"
    if name in g.edges:
        raise MovePreconditionViolated(f"double: edge {name} exists")
    orders = {}
    for x in g.vertices:
        ends = []
        for end in g.end_order[x]:
            if end == t(e):
                ends += [t(e), t(name)]
            elif end == s(e):
                ends += [s(name), s(e)]
            else:
                ends.append(end)
        orders[x] = ends
    edges = []
    for f in g.edge_ids:
        edges.append((f, *g.edges[f]))
        if f == e:
            edges.append((name, *g.edges[f]))
    g2 = CiliatedRibbonGraph(g.vertices, edges, orders)
    edge_map, end_map = _identity_maps(g)
    a, b = g.edges[e]
    edge_map[name] = PathWord(((e, 1),), a, b)
    end_map[sub_edge(s(name))] = PathWord(((sub_edge(s(e)), 1),), a, mid(e))
    end_map[sub_edge(t(name))] = PathWord(((sub_edge(t(e)), 1),), mid(e), b)
    return GraphMoveResult("double", g, g2, {x: x for x in g.vertices}, edge_map, end_map,
                           {"edge": e, "new": name})


def _fresh(g: CiliatedRibbonGraph, prefix: str) -> str:
    k = 1
    while f"{prefix}{k}" in g.edges:
        k += 1
    return f"{prefix}{k}"


MOVES = {
    "delete": lambda g, a: move_delete(g, a[0]),
    "contract-start": lambda g, a: move_contract_start(g, a[0]),
    "contract-target": lambda g, a: move_contract_target(g, a[0]),
    "add-loop": lambda g, a: move_add_loop(g, a[0], int(a[1]), *(a[2:3])),
    "detach": lambda g, a: move_detach(g, a[0], a[1], *(a[2:3])),
    "double": lambda g, a: move_double(g, a[0], *(a[1:2])),
}


def apply_move(g: CiliatedRibbonGraph, spec: str) -> GraphMoveResult:
    """Apply a move given as ``kind:arg[,arg...]``, e.g. ``contract-target:e1``."""
    kind, _, rest = spec.partition(":")
    if kind not in MOVES:
        raise MovePreconditionViolated(f"unknown move {kind}")
    args = [a for a in rest.split(",") if a]
    try:
        return MOVES[kind](g, args)
    except (IndexError, ValueError) as exc:
        if isinstance(exc, MovePreconditionViolated):
            raise
        raise MovePreconditionViolated(f"{kind}: bad arguments {args}") from exc


def compose_moves(results: Sequence[GraphMoveResult]) -> Tuple[Dict[str, PathWord], Dict[str, str]]:
    """Edge assignment and vertex map from the last graph back to the first."""
    first = results[0]
    edge_map = dict(first.edge_map)
    vmap = dict(first.vertex_map)
    for res in results[1:]:
        edge_map = {e: apply_functor(first.source, edge_map, p, vmap) for e, p in res.edge_map.items()}
        vmap = {v: vmap[w] for v, w in res.vertex_map.items()}
    return edge_map, vmap


# --- regularity witness ----------------------------------------------------------

def verify_regularity_witness(g: CiliatedRibbonGraph, p: PathWord, moves: Sequence[str],
                              p_prime: Sequence[Letter]) -> Tuple[bool, str]:
    """Check that ``moves`` (delete/double/detach only) and the word p' witness regularity of p."""
    results = []
    cur = g
    for spec in moves:
        kind = spec.partition(":")[0]
        if kind not in ("delete", "double", "detach"):
            return False, f"move {kind} not allowed in a regularity witness"
        res = apply_move(cur, spec)
        results.append(res)
        cur = res.graph
    if any(cur.valence(v) > 2 for v in cur.vertices):
        return False, "final graph has a vertex of valence > 2"
    q = word(cur, p_prime)
    if len(q.letters) != len(p_prime):
        return False, "witness word is not reduced"
    used = [e for e, _ in q.letters]
    if sorted(used) != sorted(cur.edge_ids):
        return False, "witness word does not traverse each edge exactly once"
    if results:
        edge_map, vmap = compose_moves(results)
        image = apply_functor(g, edge_map, q, vmap)
    else:
        image = q
    if image.letters != p.letters:
        return False, f"image {image} differs from {p}"
    return True, "ok"
