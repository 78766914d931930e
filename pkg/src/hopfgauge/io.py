"""Text formats for groups and ciliated ribbon graphs.

Group::

    order 2
    names e a
    e a
    a e

Graph (the cilium sits before the first listed end)::

    vertex v: t(a) t(b) s(a) s(b)
    edge a v -> v

``#`` starts a comment in both formats.
"""
from __future__ import annotations

import re
from importlib import resources
from pathlib import Path
from typing import Dict, List, Tuple

from .graph import CiliatedRibbonGraph, end_str
from .hopf import GroupTable

_END = re.compile(r"([st])\(([^()\s]+)\)$")
_IDENT = re.compile(r"[A-Za-z0-9_.\-']+$")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


def _lines(text: str):
    """(line number, tokens with 1-based columns) for every non-blank line."""
    for n, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        toks = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", body)]
        if toks:
            yield n, toks


def parse_group(text: str) -> GroupTable:
    rows = list(_lines(text))
    if not rows:
        raise ParseError("empty group file", 1, 1)
    n0, toks = rows[0]
    if len(toks) != 2 or toks[0][0] != "order":
        raise ParseError("expected 'order N'", n0, toks[0][1])
    try:
        order = int(toks[1][0])
    except ValueError:
        raise ParseError(f"bad order {toks[1][0]!r}", n0, toks[1][1]) from None
    if order < 1:
        raise ParseError("order must be positive", n0, toks[1][1])
    if len(rows) < 2 or rows[1][1][0][0] != "names":
        line = rows[1][0] if len(rows) > 1 else n0 + 1
        raise ParseError("expected 'names ...'", line, 1)
    n1, toks = rows[1]
    names = [tok for tok, _ in toks[1:]]
    if len(names) != order:
        raise ParseError(f"{len(names)} names for order {order}", n1, toks[0][1])
    if len(set(names)) != order:
        raise ParseError("repeated element name", n1, toks[0][1])
    pos = {x: i for i, x in enumerate(names)}
    table = rows[2:]
    if len(table) != order:
        line = table[order][0] if len(table) > order else (table[-1][0] + 1 if table else n1 + 1)
        raise ParseError(f"expected {order} table rows, found {len(table)}", line, 1)
    product = []
    for n, toks in table:
        if len(toks) != order:
            raise ParseError(f"row has {len(toks)} entries, expected {order}", n, toks[0][1])
        row = []
        for tok, col in toks:
            if tok not in pos:
                raise ParseError(f"unknown element {tok!r}", n, col)
            row.append(pos[tok])
        product.append(row)
    return GroupTable(order, names, product)


def serialize_group(g: GroupTable) -> str:
    names = g.element_names
    lines = [f"order {g.order}", "names " + " ".join(names)]
    lines += [" ".join(names[x] for x in row) for row in g.product]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> CiliatedRibbonGraph:
    vertices: List[str] = []
    order: Dict[str, list] = {}
    edges: List[Tuple[str, str, str]] = []
    for n, toks in _lines(text):
        head, col = toks[0]
        if head == "vertex":
            if len(toks) < 2 or not toks[1][0].endswith(":"):
                raise ParseError("expected 'vertex <id>: <ends>'", n, col)
            v = toks[1][0][:-1]
            if not _IDENT.match(v):
                raise ParseError(f"bad vertex id {v!r}", n, toks[1][1])
            if v in order:
                raise ParseError(f"vertex {v} declared twice", n, toks[1][1])
            ends = []
            for tok, c in toks[2:]:
                m = _END.match(tok)
                if not m:
                    raise ParseError(f"bad edge end {tok!r}", n, c)
                ends.append((m.group(1), m.group(2)))
            vertices.append(v)
            order[v] = ends
        elif head == "edge":
            if len(toks) != 5 or toks[3][0] != "->":
                raise ParseError("expected 'edge <id> <start> -> <target>'", n, col)
            for tok, c in (toks[1], toks[2], toks[4]):
                if not _IDENT.match(tok):
                    raise ParseError(f"bad identifier {tok!r}", n, c)
            edges.append((toks[1][0], toks[2][0], toks[4][0]))
        else:
            raise ParseError(f"unknown keyword {head!r}", n, col)
    if not vertices:
        raise ParseError("no vertices", 1, 1)
    return CiliatedRibbonGraph(vertices, edges, order)


def serialize_graph(g: CiliatedRibbonGraph) -> str:
    lines = [f"vertex {v}: " + " ".join(end_str(x) for x in g.end_order[v]) for v in g.vertices]
    lines += [f"edge {e} {a} -> {b}" for e, (a, b) in ((e, g.edges[e]) for e in g.edge_ids)]
    return "\n".join(lines) + "\n"


def data_path(name: str) -> Path:
    """A file on disk, or one of the shipped data files such as ``torus.graph``."""
    p = Path(name)
    if p.exists():
        return p
    shipped = resources.files("hopfgauge") / "data" / name
    if shipped.is_file():
        return Path(str(shipped))
    raise FileNotFoundError(name)


def load_group(name: str) -> GroupTable:
    return parse_group(data_path(name).read_text())


def load_graph(name: str) -> CiliatedRibbonGraph:
    return parse_graph(data_path(name).read_text())
