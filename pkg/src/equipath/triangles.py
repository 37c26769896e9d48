"""Triangle statistics: counts, book size, and the outside-vertex profile.

For a graph of order n with t triangles, every triangle T and vertex v not
in T contribute one unit to outside_adjacency[i] where i is the number of
T's corners adjacent to v, so the four buckets always sum to t*(n-3).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, _bits, from_edges, is_isomorphic
from .constructions import complete_bipartite, k_nn_minus

__all__ = [
    "TriangleProfile",
    "MantelClassification",
    "triangle_count",
    "book_size",
    "triangle_profile",
    "mantel_classify",
]


def _triangles(g: Graph):
    """Yield each triangle once as (u, v, x) with u < v < x, lexicographically."""
    adj = g.adj
    for u in range(g.order):
        row_u = adj[u] >> (u + 1)
        for dv in _bits(row_u):
            v = u + 1 + dv
            common = adj[u] & adj[v]
            for dx in _bits(common >> (v + 1)):
                yield u, v, v + 1 + dx


def triangle_count(g: Graph) -> int:
    adj = g.adj
    total = 0
    for u in range(g.order):
        for dv in _bits(adj[u] >> (u + 1)):
            total += (adj[u] & adj[u + 1 + dv]).bit_count()
    return total // 3


def book_size(g: Graph) -> int:
    """Largest number of triangles sharing one edge; 0 for edgeless graphs."""
    adj = g.adj
    best = 0
    for u in range(g.order):
        for dv in _bits(adj[u] >> (u + 1)):
            c = (adj[u] & adj[u + 1 + dv]).bit_count()
            if c > best:
                best = c
    return best


@dataclass(frozen=True)
class TriangleProfile:
    """triangles: total count.  book: max triangles on a single edge.
    outside_adjacency[i]: pairs (vertex, triangle) where the vertex lies
    outside the triangle and is adjacent to exactly i of its corners.
    m_statistic: sum over edges of (common neighbors) * (common non-neighbors),
    both taken among the other n-2 vertices.
    """

    triangles: int
    book: int
    outside_adjacency: tuple[int, int, int, int]
    m_statistic: int


def triangle_profile(g: Graph) -> TriangleProfile:
    n = g.order
    adj = g.adj
    full = (1 << n) - 1
    buckets = [0, 0, 0, 0]
    count = 0
    for u, v, x in _triangles(g):
        count += 1
        tmask = (1 << u) | (1 << v) | (1 << x)
        for w in range(n):
            if tmask >> w & 1:
                continue
            buckets[(adj[w] & tmask).bit_count()] += 1
    m_stat = 0
    book = 0
    for u in range(n):
        for dv in _bits(adj[u] >> (u + 1)):
            v = u + 1 + dv
            common = (adj[u] & adj[v]).bit_count()
            if common > book:
                book = common
            co_absent = (full & ~adj[u] & ~adj[v] & ~(1 << u) & ~(1 << v)).bit_count()
            m_stat += common * co_absent
    return TriangleProfile(count, book, tuple(buckets), m_stat)


@dataclass(frozen=True)
class MantelClassification:
    """Outcome of classifying a dense even-order graph.

    label is 'has_triangle' together with the first triangle found, or names the
    triangle-free shape: 'K(n-1,n+1)', 'K(n,n)-e', or 'K(n,n)'.
    """

    label: str
    half_order: int
    triangle: tuple[int, int, int] | None


def mantel_classify(g: Graph) -> MantelClassification:
    """Classify a graph on 2n vertices with at least n*n-1 edges: either it
    has a triangle (returned with the lexicographically first one) or it is
    one of the three known triangle-free shapes at that density.
    """
    if g.order % 2:
        raise ValueError(f"order must be even, got {g.order}")
    half = g.order // 2
    needed = half * half - 1
    if g.edge_count() < needed:
        raise ValueError(
            f"needs at least {needed} edges at order {g.order}, got {g.edge_count()}")
    for tri in _triangles(g):
        return MantelClassification("has_triangle", half, tri)
    if half == 1:
        minus = from_edges(2, [])
    else:
        minus = k_nn_minus(half)
    candidates = [
        ("K(n-1,n+1)", complete_bipartite(half - 1, half + 1)),
        ("K(n,n)-e", minus),
        ("K(n,n)", complete_bipartite(half, half)),
    ]
    for label, h in candidates:
        if is_isomorphic(g, h):
            return MantelClassification(label, half, None)
    raise ValueError("triangle-free graph matches none of the expected shapes")
