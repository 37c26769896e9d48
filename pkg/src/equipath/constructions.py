"""Named graph families used as lower-bound witnesses and test fixtures.

Each builder is deterministic about labeling so serialized output is stable:
bipartite-style families put the first part on 0..a-1 and the second on
a..a+b-1.
"""

from __future__ import annotations

from .graphs import Graph, from_edges

__all__ = [
    "complete_bipartite",
    "half_graph",
    "modified_half_graph",
    "clique_union_complement",
    "k_nn_minus",
    "tight_triangle_a",
    "tight_triangle_b",
    "parse_construction",
    "FAMILIES",
]


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}; one part may be empty but not both."""
    if a < 0 or b < 0:
        raise ValueError("part sizes must be nonnegative")
    if a + b < 1:
        raise ValueError("both parts are empty")
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def half_graph(n: int) -> Graph:
    """Bipartite graph on parts u_1..u_n (labels 0..n-1) and v_1..v_n
    (labels n..2n-1) with u_i adjacent to v_j exactly when i <= j.

    Every degree 1..n appears exactly twice, once per part.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    return from_edges(2 * n, [(i, n + j) for i in range(n) for j in range(i, n)])


def modified_half_graph(n: int) -> Graph:
    """Half graph rewired at the middle: the two crossing edges at positions
    n/2 and n/2+1 are replaced by one edge inside each part.

    Keeps the degree sequence and edge count of half_graph(n) but is not
    isomorphic to it.  Requires even n.
    """
    if n < 2 or n % 2:
        raise ValueError("n must be even and at least 2")
    h = half_graph(n)
    k = n // 2
    edges = set(h.edges())
    edges.discard((k - 1, n + k - 1))
    edges.discard((k, n + k))
    edges.add((k - 1, k))
    edges.add((n + k - 1, n + k))
    return from_edges(2 * n, sorted(edges))


def clique_union_complement(m: int) -> Graph:
    """Complement of the disjoint union of cliques of sizes 1, 2, ..., m.

    Order m(m+1)/2; any two adjacent vertices come from cliques of different
    sizes, so adjacent degrees always differ.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    n = m * (m + 1) // 2
    edges = []
    start = 0
    blocks = []
    for size in range(1, m + 1):
        blocks.append(range(start, start + size))
        start += size
    for bi in range(len(blocks)):
        for bj in range(bi + 1, len(blocks)):
            for u in blocks[bi]:
                for v in blocks[bj]:
                    edges.append((u, v))
    return from_edges(n, edges)


def k_nn_minus(n: int) -> Graph:
    """K_{n,n} with the single edge (0, n) removed."""
    if n < 2:
        raise ValueError("n must be at least 2")
    g = complete_bipartite(n, n)
    edges = [(u, v) for (u, v) in g.edges() if (u, v) != (0, n)]
    return from_edges(2 * n, edges)


def tight_triangle_a(n: int) -> Graph:
    """K_{n-1,n+1} plus one edge inside the larger part, minus the first edge
    at that new edge's endpoint.  n*n-1 edges and exactly n-2 triangles.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    g = complete_bipartite(n - 1, n + 1)
    x, y = n - 1, n
    edges = [(u, v) for (u, v) in g.edges() if (u, v) != (0, x)]
    edges.append((x, y))
    return from_edges(2 * n, sorted(edges))


def tight_triangle_b(n: int) -> Graph:
    """K_{n,n} plus one edge inside the second part, minus the first two edges
    at that new edge's endpoint.  n*n-1 edges and exactly n-2 triangles.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    g = complete_bipartite(n, n)
    x, y = n, n + 1
    edges = [(u, v) for (u, v) in g.edges() if (u, v) not in ((0, x), (1, x))]
    edges.append((x, y))
    return from_edges(2 * n, sorted(edges))


FAMILIES = {
    "complete_bipartite": (2, complete_bipartite),
    "half_graph": (1, half_graph),
    "modified_half_graph": (1, modified_half_graph),
    "clique_union_complement": (1, clique_union_complement),
    "k_nn_minus": (1, k_nn_minus),
    "tight_triangle_a": (1, tight_triangle_a),
    "tight_triangle_b": (1, tight_triangle_b),
}


def parse_construction(text: str) -> Graph:
    """Build a graph from its textual form, e.g. 'complete_bipartite:3,4'
    or 'half_graph:5'.  Parameters are validated before construction.
    """
    name, sep, rest = text.partition(":")
    name = name.strip()
    if name not in FAMILIES:
        known = ", ".join(sorted(FAMILIES))
        raise ValueError(f"unknown family {name!r} (known: {known})")
    arity, builder = FAMILIES[name]
    if not sep:
        raise ValueError(f"{name} needs {arity} integer parameter(s), got none")
    parts = [p.strip() for p in rest.split(",")]
    if len(parts) != arity:
        raise ValueError(f"{name} needs {arity} integer parameter(s), got {len(parts)}")
    try:
        params = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"non-integer parameter in {text!r}") from None
    return builder(*params)
