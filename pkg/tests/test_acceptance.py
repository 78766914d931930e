"""Acceptance criteria 1-13, all exact.

Each test records one PASS/FAIL line; conftest prints them after the run and
``python tests/test_acceptance.py`` prints them directly.
"""
import random
import time

from hopfgauge.catalog import battery, move_battery, single_edge, single_loop, theta, theta_torus, torus
from hopfgauge.exact import ONE, same_span, vscale
from hopfgauge.gauge import (build_function_algebra, cilium_move_map, module_algebra_report,
                             verify_twist_duality, vertex_algebra, well_formedness_report)
from hopfgauge.graph import PathWord, faces, parse_word, word
from hopfgauge.holonomy import (character_algebra_basis, curvature, face_projector, functor_law_holds,
                                holonomy, holonomy_commutation_report, moduli_algebra)
from hopfgauge.hopf import (drinfeld_double, function_algebra, group_algebra, is_factorisable,
                            standard_group, trivial_qt, verify_hopf_axioms, verify_quasitriangular,
                            verify_twist)
from hopfgauge.identifications import (edge_identification_report, heisenberg_anti_isomorphism_report,
                                       literal_flip_report, loop_identification_report)
from hopfgauge.movemaps import contraction_report, homomorphism_report, move_map
from hopfgauge.oracle import flat_moduli_dim, invariant_dim
from hopfgauge.relations import cases_covered, compare_routes

GROUPS = ("Z2", "Z3", "S3")
LINES = {}


def _record(n, ok, detail, t0):
    LINES[n] = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'} ({time.perf_counter() - t0:.1f} s) {detail}"
    print(LINES[n])
    return ok


def _dz2():
    return drinfeld_double(group_algebra(standard_group("Z2")))


def test_criterion_01_hopf_axioms():
    t0 = time.perf_counter()
    bad = []
    for name in GROUPS:
        G = standard_group(name)
        for K in (group_algebra(G), function_algebra(G), drinfeld_double(group_algebra(G))[0]):
            rep = verify_hopf_axioms(K)
            if not rep.passed:
                bad.append(f"{K.name}: {rep.failed()}")
    assert _record(1, not bad, "; ".join(bad) or "9 Hopf algebras", t0)


def test_criterion_02_quasitriangularity():
    t0 = time.perf_counter()
    bad = []
    for name in GROUPS:
        K, qt = drinfeld_double(group_algebra(standard_group(name)))
        rep = verify_quasitriangular(K, qt)
        need = {"hexagon_1", "hexagon_2", "intertwiner", "qybe"}
        missing = need - set(rep.status())
        if missing or not rep.passed:
            bad.append(f"D({name}): {rep.failed() or sorted(missing)}")
        if not is_factorisable(K, qt):
            bad.append(f"D({name}) not factorisable")
    assert _record(2, not bad, "; ".join(bad) or "D(Z2), D(Z3), D(S3)", t0)


def test_criterion_03_twist():
    t0 = time.perf_counter()
    K, qt = _dz2()
    bad = [f"F^{n}: {verify_twist(K, qt, n).failed()}" for n in (2, 3) if not verify_twist(K, qt, n).passed]
    for n in (1, 2):
        for sigma in ([(0,), (1,)] if n == 1 else [(0, 0), (0, 1), (1, 0), (1, 1)]):
            if not verify_twist_duality(vertex_algebra(K, qt, (0,) * n, sigma)).passed:
                bad.append(f"duality sigma={sigma}")
    assert _record(3, not bad, "; ".join(bad) or "cocycle n=2,3; duality n<=2", t0)


def test_criterion_04_well_formedness():
    t0 = time.perf_counter()
    K, qt = _dz2()
    bad, covered = [], set()
    for name, g in battery().items():
        fa = build_function_algebra(g, K, qt)
        for rep in (well_formedness_report(fa), module_algebra_report(fa), compare_routes(fa)):
            if not rep.passed:
                bad.append(f"{name}: {rep.failed()}")
        covered |= cases_covered(g)
    if len(covered) != 12:
        bad.append(f"constellations covered: {sorted(covered)}")
    assert _record(4, not bad, "; ".join(bad) or f"{len(battery())} graphs, 12 constellations", t0)


def test_criterion_05_rho_independence():
    t0 = time.perf_counter()
    K, qt = _dz2()
    bad = [name for name, g in battery().items()
           if build_function_algebra(g, K, qt, rho="s").structure_constants()
           != build_function_algebra(g, K, qt, rho="t").structure_constants()]
    assert _record(5, not bad, ", ".join(bad) or "all battery graphs", t0)


def test_criterion_06_projector():
    t0 = time.perf_counter()
    K, qt = _dz2()
    bad = []
    for name, g in battery().items():
        fa = build_function_algebra(g, K, qt)
        inv = fa.invariant_basis()
        images = [fa.project({x: ONE}) for x in fa.basis()]
        if any(fa.project(y) != y for y in images):
            bad.append(f"{name}: not idempotent")
        if not same_span(inv, fa.invariant_kernel_basis()):
            bad.append(f"{name}: image differs from invariant subspace")
    assert _record(6, not bad, "; ".join(bad) or "all battery graphs", t0)


def test_criterion_07_oracle():
    t0 = time.perf_counter()
    frozen = {("S3", "loop"): 3, ("Z2", "edge"): 1, ("Z3", "edge"): 1, ("S3", "edge"): 1}
    graphs = {"loop": single_loop, "edge": single_edge, "theta": theta, "torus": torus}
    bad, seen = [], []
    for name in GROUPS:
        G = standard_group(name)
        K = group_algebra(G)
        for gname, mk in graphs.items():
            g = mk()
            hopf = len(build_function_algebra(g, K, trivial_qt(K)).invariant_basis())
            oracle = invariant_dim(G, g)
            seen.append(f"{name}/{gname}={oracle}")
            if hopf != oracle or frozen.get((name, gname), oracle) != oracle:
                bad.append(f"{name}/{gname}: hopf {hopf}, oracle {oracle}")
    assert _record(7, not bad, "; ".join(bad) or " ".join(seen), t0)


def test_criterion_08_moves():
    t0 = time.perf_counter()
    K, qt = _dz2()
    bad, count = [], {}
    for name, spec, res in move_battery(max_edges=2):
        mm = move_map(res, K, qt)
        reps = [homomorphism_report(mm)]
        if res.kind.startswith("contract"):
            reps.append(contraction_report(mm))
        for rep in reps:
            if not rep.passed:
                bad.append(f"{name} {spec}: {rep.failed()}")
        count[res.kind] = count.get(res.kind, 0) + 1
    detail = ", ".join(f"{k} {v}" for k, v in sorted(count.items()))
    assert _record(8, not bad, "; ".join(bad) or detail, t0)


def test_criterion_09_holonomy():
    t0 = time.perf_counter()
    K, qt = _dz2()
    bad = []
    for name in ("edge", "path2", "lollipop_e", "digon", "theta"):
        fa = build_function_algebra(battery()[name], K, qt)
        for e in fa.edges:
            p = word(fa.graph, [(e, 1)])
            back = PathWord((p.letters[0], (e, -1)), p.start, p.start)  # p^-1 o p, unreduced
            cols = holonomy(fa, back).cols
            if any(cols[a] != vscale(fa.unit(), fa.Kd.counit[a]) for a in range(fa.d)):
                bad.append(f"{name}: hol of {e}^-1 o {e}")
    fa = build_function_algebra(torus(), K, qt)
    rng = random.Random(7)
    steps = [("a", 1), ("a", -1), ("b", 1), ("b", -1)]
    for _ in range(12):
        w = [rng.choice(steps) for _ in range(3)]
        cut = rng.randint(1, 2)
        if not functor_law_holds(fa, PathWord(tuple(w[:cut]), "v", "v"), PathWord(tuple(w[cut:]), "v", "v")):
            bad.append(f"composition {w}")
    fa = build_function_algebra(single_loop(), K, qt)
    rep = holonomy_commutation_report(fa, parse_word(fa.graph, "a"))
    if not rep.passed:
        bad.append(f"single loop: {rep.failed()}")
    fa = build_function_algebra(battery()["path2"], K, qt)
    rep = holonomy_commutation_report(fa, parse_word(fa.graph, "e2*e1"))
    if not rep.passed or "gauge covariance" not in rep.status():
        bad.append(f"2-edge path: {rep.failed()}")
    assert _record(9, not bad, "; ".join(bad) or "groupoid, composition, loop relations, covariance", t0)


def test_criterion_10_curvature():
    t0 = time.perf_counter()
    K, qt = _dz2()
    bad = []
    for gname, mk in (("torus", torus), ("theta", theta), ("theta_torus", theta_torus)):
        fa = build_function_algebra(mk(), K, qt)
        m = moduli_algebra(fa)
        if not m.report.passed:
            bad.append(f"{gname}: {m.report.failed()}")
        for f in faces(fa.graph):
            P = face_projector(fa, f, on="invariants")
            one = P(fa.unit())
            for alpha in character_algebra_basis(K):
                eps = sum(c * fa.Kd.counit[a] for a, c in alpha.items())
                if P(fa.project(curvature(fa, f)(alpha))) != vscale(one, eps):
                    bad.append(f"{gname}: P_f hol_f(alpha) at {f}")
                    break
    assert _record(10, not bad, "; ".join(bad) or "central, idempotent, commuting, flat on C(K)", t0)


def test_criterion_11_moduli():
    t0 = time.perf_counter()
    bad, vals = [], []

    def dim(K, qt, g):
        return moduli_algebra(build_function_algebra(g, K, qt)).dim

    for name, g, want in (("Z2", torus(), 4), ("S3", torus(), 8), ("Z2", single_loop(), 1),
                          ("Z3", single_loop(), 1), ("S3", single_loop(), 1)):
        G = standard_group(name)
        K = group_algebra(G)
        got, oracle = dim(K, trivial_qt(K), g), flat_moduli_dim(G, g)
        vals.append(f"{name}/{len(g.edges)}e={got}")
        if not got == oracle == want:
            bad.append(f"{name}: hopf {got}, oracle {oracle}, expected {want}")
    K = group_algebra(standard_group("Z2"))
    for label, (KK, qq) in (("F[Z2]", (K, trivial_qt(K))), ("D(Z2)", _dz2())):
        a, b = dim(KK, qq, torus()), dim(KK, qq, theta_torus())
        vals.append(f"{label} torus {a}/{b}")
        if a != b:
            bad.append(f"{label}: torus presentations give {a} and {b}")
    assert _record(11, not bad, "; ".join(bad) or ", ".join(vals), t0)


def test_criterion_12_cilium_independence():
    t0 = time.perf_counter()
    K, qt = _dz2()
    bad = []
    for name, g in battery().items():
        fa = build_function_algebra(g, K, qt)
        for v in g.vertices:
            for step in range(1, g.valence(v)):
                fa2, _ = cilium_move_map(fa, v, step)
                if not same_span(fa.invariant_basis(), fa2.invariant_basis()):
                    bad.append(f"{name} at {v} by {step}")
    assert _record(12, not bad, ", ".join(bad) or "every rotation on the battery", t0)


def test_criterion_13_identifications():
    t0 = time.perf_counter()
    H = group_algebra(standard_group("Z2"))
    K, qt = drinfeld_double(H)
    loop = loop_identification_report(K, qt)
    edge = edge_identification_report(H)
    twisted = heisenberg_anti_isomorphism_report(H)
    literal = literal_flip_report(H)
    parts = [f"loop D: {'pass' if loop.passed else loop.failed()}",
             f"flip anti-iso from H_L(H): {'pass' if literal.passed else 'FAILS'}",
             f"flip iso from H_L(H^op): {'pass' if edge.passed else edge.failed()}",
             f"twisted flip anti-iso from H_L(H): {'pass' if twisted.passed else twisted.failed()}"]
    # the criterion names the flip map itself, so the literal check decides
    ok = loop.passed and literal.passed
    assert _record(13, ok, "; ".join(parts), t0), "see notes on the single-edge identification"


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
    print("\n".join(LINES[n] for n in sorted(LINES)))
