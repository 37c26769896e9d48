"""Reproduction suites for the headline extremal facts.

Each suite re-derives one cluster of values from scratch (exhaustive search,
construction checks, or statistic identities) and compares them against the
expected closed forms, emitting one CheckRow per comparison.  Rows never
encode a value the engine produced as its own expectation; every expected
column comes from a formula or an independently derived constant.

The scale knob shrinks sweep extents for quick smoke runs; 1.0 is the full
suite.  Worker counts are plumbed through to the search engine and must not
change any row.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .constructions import (
    clique_union_complement,
    complete_bipartite,
    half_graph,
    modified_half_graph,
    tight_triangle_a,
    tight_triangle_b,
)
from .graphs import Graph, canonical_bytes, from_edges, is_isomorphic
from .paths import has_equal_degree_p3, has_equal_degree_path
from .search import (
    SearchConfig,
    compute_p,
    enumerate_graphs,
    lower_bound_from_constructions,
    p1_upper_bound,
    verify_uniqueness,
)
from .triangles import mantel_classify, triangle_count, triangle_profile

__all__ = ["CheckRow", "SUITES", "run_suite", "DEFAULT_SEED"]

DEFAULT_SEED = 20260816


@dataclass(frozen=True)
class CheckRow:
    suite: str
    name: str
    status: str
    expected: str
    observed: str


def _check(suite: str, name: str, expected, observed) -> CheckRow:
    ok = expected == observed
    return CheckRow(suite, name, "ok" if ok else "mismatch",
                    str(expected), str(observed))


def _report(suite: str, name: str, observed) -> CheckRow:
    return CheckRow(suite, name, "report", "", str(observed))


def _scaled(base: int, scale: float, floor: int) -> int:
    return max(floor, int(round(base * scale)))


def suite_p1(scale: float = 1.0, workers: int = 1,
             seed: int = DEFAULT_SEED) -> list[CheckRow]:
    """Adjacent equal-degree avoidance: values against the closed-form bound,
    attained exactly at triangular orders, with known small values frozen."""
    cfg = SearchConfig(workers=workers)
    rows = []
    hi = 8 if scale >= 0.9 else 6
    exact = {3: 2, 4: 3, 5: 6, 6: 11, 7: 14, 8: 19}
    for n in range(3, hi + 1):
        v = compute_p(1, n, cfg).value
        b = p1_upper_bound(n)
        tight = "equal" if n in (3, 6) else "strict"
        got = "equal" if v == b else "strict"
        rows.append(_check("p1", f"p1({n}) against bound {b}",
                           f"{exact[n]} ({tight})", f"{v} ({got})"))
    for n, m in ((3, 2), (6, 3)):
        want = (canonical_bytes(clique_union_complement(m)).decode(),)
        rows.append(_check("p1", f"p1({n}) witness is clique-union complement",
                           want, compute_p(1, n, cfg).witnesses))
    return rows


def suite_p2(scale: float = 1.0, workers: int = 1,
             seed: int = DEFAULT_SEED) -> list[CheckRow]:
    """Even-length avoidance at length 2: p2(2k) = k(k+1)/2, extremal class
    unique up to order 6 and joined by the modified half graph at order 8."""
    cfg = SearchConfig(workers=workers)
    rows = []
    for k in range(1, 5):
        rows.append(_check("p2", f"p2({2 * k}) equals k(k+1)/2",
                           k * (k + 1) // 2, compute_p(2, 2 * k, cfg).value))
    for k, unique in ((2, True), (3, True), (4, False)):
        u = verify_uniqueness(2, 2 * k, f"half_graph:{k}", cfg)
        rows.append(_check("p2", f"half graph attains p2({2 * k})",
                           True, u.expected_is_witness))
        rows.append(_check("p2", f"p2({2 * k}) witness class unique",
                           unique, u.unique))
    u = verify_uniqueness(2, 8, "modified_half_graph:4", cfg)
    rows.append(_check("p2", "modified half graph attains p2(8)",
                       True, u.expected_is_witness))
    rows.append(_check("p2", "p2(8) witness class count", 2, len(u.witnesses)))
    top = _scaled(20, scale, 5)
    bad = next((k for k in range(2, top + 1)
                if lower_bound_from_constructions(2, 2 * k).value
                != k * (k + 1) // 2), None)
    rows.append(_check("p2", f"verified half-graph bound for k up to {top}",
                       "all match", "all match" if bad is None else f"mismatch at k={bad}"))
    return rows


def _p3_family(n: int) -> Graph:
    """The bipartite extremal family member at order n (n >= 3)."""
    if n % 2:
        k = (n - 1) // 2
        return complete_bipartite(k, k + 1)
    k = n // 2
    return complete_bipartite(k - 1, k + 1)


def suite_p3(scale: float = 1.0, workers: int = 1,
             seed: int = DEFAULT_SEED) -> list[CheckRow]:
    """Length-3 avoidance: the bipartite families lack the property at every
    checked size, exhaustive values match the closed forms at small orders,
    and the property is witnessed as non-monotone."""
    cfg = SearchConfig(workers=workers)
    rows = []
    top = _scaled(600, scale, 12)
    bad = next((k for k in range(1, top + 1)
                if has_equal_degree_p3(complete_bipartite(k, k + 1)) is not None), None)
    rows.append(_check("p3", f"no length-3 pair in K(k,k+1) for k up to {top}",
                       "absent", "absent" if bad is None else f"present at k={bad}"))
    bad = next((k for k in range(2, top + 1)
                if has_equal_degree_p3(complete_bipartite(k - 1, k + 1)) is not None), None)
    rows.append(_check("p3", f"no length-3 pair in K(k-1,k+1) for k up to {top}",
                       "absent", "absent" if bad is None else f"present at k={bad}"))
    hi = 9 if scale >= 0.9 else 7
    for n in range(5, hi + 1):
        k = (n - 1) // 2 if n % 2 else n // 2
        want = k * k + k if n % 2 else k * k - 1
        r = compute_p(3, n, cfg)
        rows.append(_check("p3", f"p3({n}) equals closed form", want, r.value))
        rows.append(_check("p3", f"p3({n}) witness unique bipartite graph",
                           (canonical_bytes(_p3_family(n)).decode(),), r.witnesses))
    rows.append(_check("p3", "p3(4) exceeds the closed form (small-order exception)",
                       4, compute_p(3, 4, cfg).value))
    rows.append(_check("p3", "K(3,3) contains an equal-degree 3-edge path",
                       "present",
                       "present" if has_equal_degree_p3(complete_bipartite(3, 3)) else "absent"))
    rows.append(_check("p3", "K(3,4) contains none despite the K(3,3) subgraph",
                       "absent",
                       "absent" if has_equal_degree_p3(complete_bipartite(3, 4)) is None else "present"))
    return rows


def _profile_identities(g: Graph) -> bool:
    p = triangle_profile(g)
    if sum(p.outside_adjacency) != p.triangles * max(0, g.order - 3):
        return False
    return p.m_statistic == p.outside_adjacency[1] + 3 * p.outside_adjacency[0]


def suite_triangles(scale: float = 1.0, workers: int = 1,
                    seed: int = DEFAULT_SEED) -> list[CheckRow]:
    """Triangle statistics: bucket and M identities on random and exhaustive
    graphs, the triangle-free classification at maximal edge counts, the
    supersaturation floor, and the two tight families."""
    cfg = SearchConfig(workers=workers)
    rows = []
    trials = _scaled(500, scale, 50)
    rng = random.Random(seed)
    bad = None
    for t in range(trials):
        n = rng.randrange(1, 31)
        prob = rng.random()
        g = from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                           if rng.random() < prob])
        if not _profile_identities(g):
            bad = t
            break
    rows.append(_check("triangles", f"bucket and M identities on {trials} random graphs",
                       "all hold", "all hold" if bad is None else f"fail at trial {bad}"))
    hi = 7 if scale >= 0.5 else 6
    broken = []
    naive_bad = []
    total = 0

    def visit(g: Graph) -> None:
        nonlocal total
        total += 1
        if not _profile_identities(g):
            broken.append(g)
        naive = sum(1 for a, b, c in itertools.combinations(range(g.order), 3)
                    if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c))
        if naive != triangle_count(g):
            naive_bad.append(g)

    for n in range(1, hi + 1):
        enumerate_graphs(n, visit, cfg)
    rows.append(_check("triangles", f"identities on all {total} classes up to order {hi}",
                       0, len(broken)))
    rows.append(_check("triangles", "triangle_count equals naive triple enumeration",
                       0, len(naive_bad)))
    for half in (2, 3, 4):
        order, need = 2 * half, half * half - 1
        labels: dict[str, int] = {}
        minpos = None

        def classify(g: Graph) -> None:
            nonlocal minpos
            if g.edge_count() < need:
                return
            res = mantel_classify(g)
            labels[res.label] = labels.get(res.label, 0) + 1
            if res.label == "has_triangle":
                t = triangle_count(g)
                minpos = t if minpos is None else min(minpos, t)

        enumerate_graphs(order, classify, cfg)
        free = {k: v for k, v in labels.items() if k != "has_triangle"}
        rows.append(_check("triangles",
                           f"triangle-free classes with >= {need} edges at order {order}",
                           {"K(n-1,n+1)": 1, "K(n,n)-e": 1, "K(n,n)": 1}, free))
        if half >= 3:
            # the supersaturation floor is a large-order statement, so small
            # orders are reported rather than asserted
            rows.append(_report("triangles",
                                f"minimum positive triangle count at order {order}",
                                f"{minpos} (floor claim {half - 2})"))
    for half in (5, 6):
        order, need = 2 * half, half * half - 1
        pairs = [(i, j) for i in range(order) for j in range(i + 1, order)]
        samples = _scaled(200, scale, 30)
        minpos = None
        below = 0
        for _ in range(samples):
            g = from_edges(order, rng.sample(pairs, rng.randrange(need, len(pairs) + 1)))
            t = triangle_count(g)
            if t > 0:
                minpos = t if minpos is None else min(minpos, t)
                if t < half - 2:
                    below += 1
        rows.append(_report("triangles",
                            f"{samples} sampled graphs of order {order} with >= {need} edges",
                            f"min positive triangle count {minpos}, "
                            f"{below} below the floor claim {half - 2}"))
    top = _scaled(20, scale, 6)
    bad_name = None
    for n in range(4, top + 1):
        for name, g in (("a", tight_triangle_a(n)), ("b", tight_triangle_b(n))):
            if g.edge_count() != n * n - 1 or triangle_count(g) != n - 2:
                bad_name = f"{name}:{n}"
                break
        if bad_name:
            break
        if not is_isomorphic(tight_triangle_a(n), tight_triangle_b(n)):
            continue
        bad_name = f"iso:{n}"
        break
    rows.append(_check("triangles",
                       f"tight families have n^2-1 edges and n-2 triangles, n up to {top}",
                       "all hold", "all hold" if bad_name is None else f"fail at {bad_name}"))
    return rows


def suite_halfgraph(scale: float = 1.0, workers: int = 1,
                    seed: int = DEFAULT_SEED) -> list[CheckRow]:
    """Half graphs lack equal-degree paths of every checked even length, and
    at length 2 the avoidance is edge-maximal: any added edge breaks it."""
    rows = []
    top = _scaled(40, scale, 8)
    for ell in (2, 4, 6):
        bad = next((k for k in range(1, top + 1)
                    if has_equal_degree_path(half_graph(k), ell) is not None), None)
        rows.append(_check("halfgraph",
                           f"no equal-degree {ell}-edge path in H(k) for k up to {top}",
                           "absent", "absent" if bad is None else f"present at k={bad}"))
    bad = next((k for k in range(2, top + 1, 2)
                if has_equal_degree_path(modified_half_graph(k), 2) is not None), None)
    rows.append(_check("halfgraph",
                       f"no equal-degree 2-edge path in modified H(k) for even k up to {top}",
                       "absent", "absent" if bad is None else f"present at k={bad}"))
    add_top = _scaled(15, scale, 4)
    missing = None
    for k in range(1, add_top + 1):
        h = half_graph(k)
        n = h.order
        for u in range(n):
            for v in range(u + 1, n):
                if h.has_edge(u, v):
                    continue
                g = from_edges(n, list(h.edges()) + [(u, v)])
                if has_equal_degree_path(g, 2) is None:
                    missing = (k, u, v)
                    break
            if missing:
                break
        if missing:
            break
    rows.append(_check("halfgraph",
                       f"every added edge creates a 2-edge path, k up to {add_top}",
                       "all create", "all create" if missing is None
                       else f"none at k={missing[0]} edge {missing[1:]}"))
    return rows


SUITES = {
    "p1": suite_p1,
    "p2": suite_p2,
    "p3": suite_p3,
    "triangles": suite_triangles,
    "halfgraph": suite_halfgraph,
}


def run_suite(name: str, scale: float = 1.0, workers: int = 1,
              seed: int = DEFAULT_SEED) -> list[CheckRow]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    if scale <= 0:
        raise ValueError("scale must be positive")
    return SUITES[name](scale=scale, workers=workers, seed=seed)
