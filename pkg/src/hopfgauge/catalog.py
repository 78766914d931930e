"""Named ciliated ribbon graphs used by the tests, scripts and CLI."""
from __future__ import annotations

from typing import Dict

from .graph import CiliatedRibbonGraph, s, t


def _g(vertices, edges, order) -> CiliatedRibbonGraph:
    return CiliatedRibbonGraph(vertices, edges, order)


def single_edge():
    return _g(["u", "w"], [("e", "u", "w")], {"u": [s("e")], "w": [t("e")]})


def single_loop():
    return _g(["v"], [("a", "v", "v")], {"v": [t("a"), s("a")]})


def single_loop_reversed():
    return _g(["v"], [("a", "v", "v")], {"v": [s("a"), t("a")]})


def theta():
    return _g(["u", "w"], [("a", "u", "w"), ("b", "u", "w"), ("c", "u", "w")],
              {"u": [s("a"), s("b"), s("c")], "w": [t("c"), t("b"), t("a")]})


def torus():
    """Bouquet of two loops with interleaved ends."""
    return _g(["v"], [("a", "v", "v"), ("b", "v", "v")], {"v": [t("a"), t("b"), s("a"), s("b")]})


def theta_torus():
    """Two trivalent vertices and three edges, one face: a second torus presentation."""
    return _g(["u", "w"], [("a", "u", "w"), ("b", "u", "w"), ("c", "u", "w")],
              {"u": [s("a"), s("b"), s("c")], "w": [t("a"), t("b"), t("c")]})


def hexagon_torus():
    """One vertex, three loops, t(a) t(b) t(c) s(a) s(b) s(c)."""
    return _g(["v"], [("a", "v", "v"), ("b", "v", "v"), ("c", "v", "v")],
              {"v": [t("a"), t("b"), t("c"), s("a"), s("b"), s("c")]})


def cherry():
    return _g(["u", "x", "w"], [("e", "u", "w"), ("f", "x", "w")],
              {"u": [s("e")], "x": [s("f")], "w": [t("e"), t("f")]})


def path2():
    return _g(["u", "v", "w"], [("e1", "u", "v"), ("e2", "v", "w")],
              {"u": [s("e1")], "v": [s("e2"), t("e1")], "w": [t("e2")]})


def path3():
    return _g(["u", "v", "w", "x"], [("e1", "u", "v"), ("e2", "v", "w"), ("e3", "w", "x")],
              {"u": [s("e1")], "v": [t("e1"), s("e2")], "w": [t("e2"), s("e3")], "x": [t("e3")]})


def lollipop(order, reverse_edge=False, reverse_loop=False):
    """Edge e into the loop vertex v, loop f at v; ``order`` lists 'te', 'tf', 'sf' least-first."""
    e = ("e", "v", "u") if reverse_edge else ("e", "u", "v")
    names = {"te": s("e") if reverse_edge else t("e"),
             "tf": s("f") if reverse_loop else t("f"),
             "sf": t("f") if reverse_loop else s("f")}
    far = t("e") if reverse_edge else s("e")
    return _g(["u", "v"], [e, ("f", "v", "v")], {"u": [far], "v": [names[x] for x in order]})


def fork():
    """Path u -> v -> w with a third edge into v; t(e1), s(e2) adjacent at v."""
    return _g(["u", "v", "w", "x"], [("e1", "u", "v"), ("e2", "v", "w"), ("e3", "x", "v")],
              {"u": [s("e1")], "v": [t("e1"), s("e2"), t("e3")], "w": [t("e2")], "x": [s("e3")]})


def figure_eight():
    return _g(["v"], [("a", "v", "v"), ("b", "v", "v")], {"v": [t("a"), s("a"), t("b"), s("b")]})


def nested_loops():
    return _g(["v"], [("a", "v", "v"), ("b", "v", "v")], {"v": [t("a"), t("b"), s("b"), s("a")]})


def digon():
    """Parallel edges with the same order at both ends."""
    return _g(["u", "w"], [("e", "u", "w"), ("f", "u", "w")],
              {"u": [s("e"), s("f")], "w": [t("e"), t("f")]})


def digon_twisted():
    return _g(["u", "w"], [("e", "u", "w"), ("f", "u", "w")],
              {"u": [s("f"), s("e")], "w": [t("e"), t("f")]})


def digon_antiparallel():
    return _g(["u", "w"], [("e", "u", "w"), ("f", "w", "u")],
              {"u": [s("e"), t("f")], "w": [t("e"), s("f")]})


NAMED: Dict[str, callable] = {
    "edge": single_edge,
    "loop": single_loop,
    "theta": theta,
    "torus": torus,
    "theta-torus": theta_torus,
    "torus3": hexagon_torus,
}


def battery() -> Dict[str, CiliatedRibbonGraph]:
    """Graphs realising every same-edge and edge-pair constellation, in both orientations."""
    return {
        "edge": single_edge(),
        "loop": single_loop(),
        "loop_rev": single_loop_reversed(),
        "path3": path3(),
        "cherry": cherry(),
        "path2": path2(),
        "lollipop_e": lollipop(["te", "tf", "sf"]),
        "lollipop_f": lollipop(["tf", "te", "sf"]),
        "lollipop_g": lollipop(["tf", "sf", "te"]),
        "lollipop_e_rev": lollipop(["te", "tf", "sf"], reverse_edge=True, reverse_loop=True),
        "lollipop_f_rev": lollipop(["tf", "te", "sf"], reverse_edge=True),
        "lollipop_g_rev": lollipop(["tf", "sf", "te"], reverse_loop=True),
        "figure8": figure_eight(),
        "torus": torus(),
        "nested": nested_loops(),
        "digon": digon(),
        "digon_twist": digon_twisted(),
        "digon_anti": digon_antiparallel(),
        "theta": theta(),
    }


def move_battery(max_edges: int = 3):
    """Every valid move on the battery and the fork whose result has at most ``max_edges`` edges."""
    from .graph import MovePreconditionViolated, apply_move
    graphs = dict(battery())
    graphs["fork"] = fork()
    out = []
    for name, g in graphs.items():
        specs = []
        for e in g.edge_ids:
            specs += [f"delete:{e}", f"double:{e}", f"contract-start:{e}", f"contract-target:{e}"]
        for v in g.vertices:
            specs += [f"add-loop:{v},{p}" for p in range(g.valence(v) + 1)]
        specs += [f"detach:{a},{b}" for a in g.edge_ids for b in g.edge_ids]
        for spec in specs:
            try:
                res = apply_move(g, spec)
            except MovePreconditionViolated:
                continue
            if len(res.graph.edge_ids) <= max_edges:
                out.append((name, spec, res))
    return out
