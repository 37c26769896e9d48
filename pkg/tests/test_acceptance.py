"""End-to-end acceptance checks.

Each test prints a single [criterion NN] PASS/FAIL line to the real stdout,
bypassing capture so the verdicts show up in plain pytest runs, then asserts.
Numbers frozen here (extremal values, class counts, witness censuses) were
fixed in advance from brute-force passes over all labeled graphs.
"""

import itertools
import random
from time import perf_counter

from equipath.constructions import (
    complete_bipartite,
    half_graph,
    k_nn_minus,
    modified_half_graph,
    tight_triangle_a,
    tight_triangle_b,
)
from equipath.graphs import canonical_bytes, from_edges, is_isomorphic
from equipath.paths import has_equal_degree_p3, has_equal_degree_path
from equipath.search import (
    SearchConfig,
    _augment_forms,
    _levelwise_forms,
    compute_p,
    p1_upper_bound,
    verify_uniqueness,
)
from equipath.triangles import mantel_classify, triangle_profile

SEED = 20260816


def _announce(capfd, num: int, desc: str, ok: bool) -> None:
    mark = "PASS" if ok else "FAIL"
    with capfd.disabled():
        print(f"\n[criterion {num:02d}] {mark} {desc}", flush=True)


def _form(g) -> str:
    return canonical_bytes(g).decode("ascii")


def _naive_triangles(g) -> int:
    return sum(1 for a, b, c in itertools.combinations(range(g.order), 3)
               if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c))


def test_criterion_01_even_length_two_extremal_values(capfd):
    problems = []
    for k in range(1, 5):
        got = compute_p(2, 2 * k).value
        want = k * (k + 1) // 2
        if got != want:
            problems.append(f"p_2({2 * k}) = {got}, expected {want}")
    _announce(capfd, 1, "p_2(2k) equals k(k+1)/2 for k in 1..4", not problems)
    assert not problems, problems


def test_criterion_02_length_one_bound_and_tightness(capfd):
    problems = []
    values = {}
    for n in range(3, 9):
        values[n] = compute_p(1, n).value
        bound = p1_upper_bound(n)
        if values[n] > bound:
            problems.append(f"p_1({n}) = {values[n]} exceeds bound {bound}")
        if (values[n] == bound) != (n in (3, 6)):
            problems.append(f"bound tightness wrong at order {n}")
    if values[4] != 3:
        problems.append(f"p_1(4) = {values[4]}, expected 3")
    if values[6] != 11:
        problems.append(f"p_1(6) = {values[6]}, expected 11")
    _announce(capfd, 2, "p_1(3..8) respects the closed-form bound, tight exactly "
                 "at orders 3 and 6", not problems)
    assert not problems, problems


def test_criterion_03_length_three_families_and_exact_values(capfd):
    problems = []
    slowest = 0.0
    for n in range(1, 601):
        for g in (complete_bipartite(n, n + 1),
                  complete_bipartite(n - 1, n + 1)):
            t0 = perf_counter()
            wit = has_equal_degree_p3(g)
            slowest = max(slowest, perf_counter() - t0)
            if wit is not None:
                problems.append(f"unexpected length-3 witness on order "
                                f"{g.order} bipartite graph")
    if slowest >= 5.0:
        problems.append(f"single verdict took {slowest:.1f}s, limit 5s")

    floors = {5: 6, 6: 8, 7: 12, 8: 15, 9: 20}
    order9_s = 0.0
    for n, floor in floors.items():
        k = n // 2
        extremal = complete_bipartite(k, k + 1) if n % 2 \
            else complete_bipartite(k - 1, k + 1)
        t0 = perf_counter()
        res = compute_p(3, n)
        if n == 9:
            order9_s = perf_counter() - t0
        if not res.exact or res.value < floor:
            problems.append(f"p_3({n}) = {res.value}, needs exact >= {floor}")
        if has_equal_degree_p3(extremal) is not None:
            problems.append(f"construction at order {n} is not a valid avoider")
        if _form(extremal) not in res.witnesses:
            problems.append(f"construction missing from witnesses at order {n}")
    if order9_s >= 600.0:
        problems.append(f"order-9 run took {order9_s:.0f}s, limit 600s")
    _announce(capfd, 3, "length-3 verdicts absent on both bipartite families to "
                 "order 1201; exact values at orders 5..9 meet the floors "
                 f"(order 9 in {order9_s:.0f}s)", not problems)
    assert not problems, problems


def test_criterion_04_length_two_witness_census_is_not_unique(capfd):
    rep = verify_uniqueness(2, 8, "half_graph:4")
    census = set(rep.witnesses)
    expected = {_form(half_graph(4)), _form(modified_half_graph(4))}
    ok = (not rep.unique) and rep.expected_is_witness and census == expected
    _announce(capfd, 4, "order-8 length-2 extremal census holds exactly the half "
                 "graph and its modified variant", ok)
    assert ok, rep


def test_criterion_05_triangle_profile_identities(capfd, classes_by_order):
    problems = []
    rng = random.Random(SEED)
    pool = []
    for _ in range(500):
        n = rng.randrange(1, 31)
        p = rng.random()
        pool.append(from_edges(n, [e for e in
                                   itertools.combinations(range(n), 2)
                                   if rng.random() < p]))
    for n in range(1, 8):
        pool.extend(classes_by_order[n])
    for g in pool:
        prof = triangle_profile(g)
        if sum(prof.outside_adjacency) != prof.triangles * max(0, g.order - 3):
            problems.append(f"bucket sum identity fails on order {g.order}")
        if prof.m_statistic != prof.outside_adjacency[1] + 3 * prof.outside_adjacency[0]:
            problems.append(f"m-statistic identity fails on order {g.order}")
    for n in range(1, 8):
        for g in classes_by_order[n]:
            if triangle_profile(g).triangles != _naive_triangles(g):
                problems.append(f"triangle count disagrees with naive "
                                f"enumeration at order {n}")
    _announce(capfd, 5, "triangle profile identities hold on 500 random graphs and "
                 "all classes to order 7; counts match naive enumeration",
              not problems)
    assert not problems, problems[:5]


def test_criterion_06_triangle_free_near_extremal_classification(capfd, classes_by_order):
    problems = []
    for half in (2, 3, 4):
        named = {
            "K(n-1,n+1)": complete_bipartite(half - 1, half + 1),
            "K(n,n)-e": k_nn_minus(half),
            "K(n,n)": complete_bipartite(half, half),
        }
        found = set()
        for g in classes_by_order[2 * half]:
            if g.edge_count() < half * half - 1 or _naive_triangles(g):
                continue
            label = mantel_classify(g).label
            if label not in named:
                problems.append(f"unclassified triangle-free graph at order "
                                f"{2 * half}: label {label}")
                continue
            if not is_isomorphic(g, named[label]):
                problems.append(f"label {label} does not match its graph at "
                                f"order {2 * half}")
            found.add(_form(g))
        if found != {_form(g) for g in named.values()}:
            problems.append(f"census at order {2 * half} is not exactly the "
                            f"three named classes")
    _announce(capfd, 6, "every triangle-free class at orders 4, 6, 8 with at least "
                 "(n/2)^2 - 1 edges is one of the three named bipartite "
                 "graphs, labeled correctly", not problems)
    assert not problems, problems


def test_criterion_07_tight_triangle_families(capfd):
    problems = []
    for n in range(4, 21):
        for tag, g in (("a", tight_triangle_a(n)), ("b", tight_triangle_b(n))):
            prof = triangle_profile(g)
            if g.edge_count() != n * n - 1:
                problems.append(f"family {tag} order {2 * n}: "
                                f"{g.edge_count()} edges, expected {n * n - 1}")
            if prof.triangles != n - 2:
                problems.append(f"family {tag} order {2 * n}: "
                                f"{prof.triangles} triangles, expected {n - 2}")
    _announce(capfd, 7, "both tight families carry n^2 - 1 edges and exactly n - 2 "
                 "triangles for n in 4..20", not problems)
    assert not problems, problems


def test_criterion_08_half_graph_even_lengths_and_additions(capfd):
    problems = []
    for k in range(1, 41):
        h = half_graph(k)
        for ell in (2, 4, 6):
            if has_equal_degree_path(h, ell) is not None:
                problems.append(f"H_{k} unexpectedly has a length-{ell} path")
    for k in range(1, 16):
        h = half_graph(k)
        edges = list(h.edges())
        present = set(edges)
        for pair in itertools.combinations(range(2 * k), 2):
            if pair in present:
                continue
            g = from_edges(2 * k, edges + [pair])
            if has_equal_degree_path(g, 2) is None:
                problems.append(f"H_{k} plus edge {pair} still has no "
                                f"length-2 witness")
    _announce(capfd, 8, "half graphs avoid lengths 2, 4, 6 through k = 40, and any "
                 "single added edge through k = 15 creates a length-2 "
                 "witness", not problems)
    assert not problems, problems[:5]


def _labeled_orbit_count(n: int) -> int:
    """Isomorphism class count over all labeled graphs, from scratch."""
    pairs = list(itertools.combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    seen: set[int] = set()
    classes = 0
    for mask in range(1 << len(pairs)):
        if mask in seen:
            continue
        classes += 1
        for perm in itertools.permutations(range(n)):
            image = 0
            for i, (a, b) in enumerate(pairs):
                if mask >> i & 1:
                    x, y = perm[a], perm[b]
                    image |= 1 << index[(x, y) if x < y else (y, x)]
            seen.add(image)
    return classes


def test_criterion_09_engine_self_consistency(capfd, forms_by_order):
    problems = []
    oracle = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34}
    for n, want in oracle.items():
        if _labeled_orbit_count(n) != want:
            problems.append(f"labeled-orbit oracle broke at order {n}")
        if len(forms_by_order[n]) != want:
            problems.append(f"enumeration count at order {n} is "
                            f"{len(forms_by_order[n])}, expected {want}")
    for n in range(1, 9):
        if sorted(_augment_forms(n)) != list(forms_by_order[n]):
            problems.append(f"methods disagree at order {n}")
    for workers in (2, 8):
        if _levelwise_forms(8, workers=workers, use_cache=False) != \
                list(forms_by_order[8]):
            problems.append(f"levelwise differs with {workers} workers")
        if _augment_forms(8, workers=workers) != _augment_forms(8, workers=1):
            problems.append(f"augmentation differs with {workers} workers")
    payloads = {w: compute_p(2, 7, SearchConfig(workers=w)).payload()
                for w in (1, 2, 8)}
    if not payloads[1] == payloads[2] == payloads[8]:
        problems.append("extremal payload varies with worker count")
    _announce(capfd, 9, "class counts match an independent labeled-orbit oracle to "
                 "order 5; both enumeration methods and worker counts 1, 2, "
                 "8 give byte-identical results to order 8", not problems)
    assert not problems, problems


def test_criterion_10_property_is_not_monotone(capfd):
    small = complete_bipartite(3, 3)
    large = complete_bipartite(3, 4)
    embeds = set(small.edges()) <= set(large.edges())
    ok = (embeds
          and has_equal_degree_p3(small) is not None
          and has_equal_degree_p3(large) is None)
    _announce(capfd, 10, "length-3 witness present on K(3,3) yet absent on its "
                  "supergraph K(3,4)", ok)
    assert ok
