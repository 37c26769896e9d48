"""Checkers for the equal-degree path property.

A graph has the property witnessed here when two distinct vertices of the
same degree are joined by a simple path with a prescribed number of edges.
The property is not monotone under adding edges, so callers must not assume
any supergraph or subgraph pruning.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, _bits

__all__ = [
    "PathWitness",
    "equal_degree_pairs",
    "path_exists_exact",
    "has_equal_degree_path",
    "has_equal_degree_p3",
]

# Above this order the length-3 checker switches from bitset scans to a
# matrix-product count; both sides are differential-tested.
_DENSE_MIN_ORDER = 129


@dataclass(frozen=True)
class PathWitness:
    """A verified occurrence: endpoints of equal degree and the path between."""

    endpoints: tuple[int, int]
    path: tuple[int, ...]
    shared_degree: int

    @property
    def length(self) -> int:
        return len(self.path) - 1

    def verify(self, g: Graph) -> None:
        """Check every invariant against g, raising ValueError on the first failure."""
        u, w = self.endpoints
        if u == w:
            raise ValueError("endpoints must be distinct")
        if self.path[0] != u or self.path[-1] != w:
            raise ValueError("path does not join the stated endpoints")
        if len(set(self.path)) != len(self.path):
            raise ValueError("path repeats a vertex")
        for a, b in zip(self.path, self.path[1:]):
            if not g.has_edge(a, b):
                raise ValueError(f"({a}, {b}) is not an edge")
        if g.degree(u) != self.shared_degree or g.degree(w) != self.shared_degree:
            raise ValueError("stated shared degree is wrong")


def equal_degree_pairs(g: Graph) -> list[tuple[int, int]]:
    """All unordered pairs of distinct vertices with equal degree, sorted."""
    by_degree: dict[int, list[int]] = {}
    for v in range(g.order):
        by_degree.setdefault(g.degree(v), []).append(v)
    pairs = []
    for vs in by_degree.values():
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                pairs.append((vs[i], vs[j]))
    pairs.sort()
    return pairs


def _bipartition(g: Graph) -> list[int] | None:
    """2-coloring by BFS, or None if some component has an odd cycle."""
    n = g.order
    color = [-1] * n
    for s in range(n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            cx = color[x]
            for y in _bits(g.adj[x]):
                if color[y] == -1:
                    color[y] = cx ^ 1
                    queue.append(y)
                elif color[y] == cx:
                    return None
    return color


def _bfs_dist(g: Graph, src: int) -> list[int]:
    n = g.order
    dist = [n + 1] * n
    dist[src] = 0
    queue = deque([src])
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in _bits(g.adj[x]):
            if dist[y] > dx:
                dist[y] = dx
                queue.append(y)
    return dist


def _find_exact_path(g, u, w, length, color=None, dist=None):
    """Lexicographically first simple path from u to w with exactly `length`
    edges, as a vertex list, or None.

    color is an optional bipartition used for a parity short-circuit; dist an
    optional BFS distance table from w used to cut dead branches.
    """
    adj = g.adj
    if color is not None and (color[u] == color[w]) == bool(length & 1):
        return None
    if length == 1:
        return [u, w] if adj[u] >> w & 1 else None
    if dist is not None and dist[u] > length:
        return None
    target_bit = 1 << w
    path = [u]

    def go(x: int, visited: int, remaining: int) -> bool:
        row = adj[x]
        if remaining == 1:
            if row & target_bit:
                path.append(w)
                return True
            return False
        for y in _bits(row & ~visited & ~target_bit):
            if dist is not None and dist[y] >= remaining:
                continue
            path.append(y)
            if go(y, visited | (1 << y), remaining - 1):
                return True
            path.pop()
        return False

    return path if go(u, 1 << u, length) else None


def path_exists_exact(g: Graph, u: int, w: int, length: int,
                      return_path: bool = False):
    """Decide whether a simple path with exactly `length` edges joins u and w.

    Endpoints must be distinct and length positive.  A length of g.order or
    more can never be realized by a simple path and yields False rather than
    an error, matching the graph-level checker.
    """
    n = g.order
    if not (0 <= u < n and 0 <= w < n):
        raise ValueError(f"vertex out of range for order {n}")
    if u == w:
        raise ValueError("endpoints must be distinct")
    if length < 1:
        raise ValueError(f"path length must be positive, got {length}")
    if length >= n:
        return (False, None) if return_path else False
    dist = _bfs_dist(g, w) if length >= 4 else None
    found = _find_exact_path(g, u, w, length, color=_bipartition(g), dist=dist)
    if return_path:
        return (found is not None), (tuple(found) if found else None)
    return found is not None


def has_equal_degree_path(g: Graph, length: int) -> PathWitness | None:
    """First equal-degree pair joined by an exact-length path, scanning pairs
    lexicographically, with the lexicographically least path for that pair.

    Returns None when no witness exists; lengths >= order are vacuously
    witness-free and also return None.
    """
    if length < 1:
        raise ValueError(f"path length must be positive, got {length}")
    n = g.order
    if length >= n:
        return None
    color = _bipartition(g)
    dists: dict[int, list[int]] = {}
    for u, w in equal_degree_pairs(g):
        if color is not None and (color[u] == color[w]) == bool(length & 1):
            continue
        dist = None
        if length >= 4:
            dist = dists.get(w)
            if dist is None:
                dist = dists[w] = _bfs_dist(g, w)
        found = _find_exact_path(g, u, w, length, color=None, dist=dist)
        if found is not None:
            return PathWitness((u, w), tuple(found), g.degree(u))
    return None


# ---------------------------------------------------------------------------
# Length-3 specialization
# ---------------------------------------------------------------------------

def _p3_extract(g: Graph, u: int, w: int) -> PathWitness:
    """Least (a, b) with u-a-b-w a valid path; caller guarantees existence."""
    adj = g.adj
    skip_u = ~(1 << u)
    for a in _bits(adj[u] & ~(1 << w)):
        t = adj[a] & adj[w] & skip_u & ~(1 << a)
        if t:
            b = (t & -t).bit_length() - 1
            return PathWitness((u, w), (u, a, b, w), g.degree(u))
    raise AssertionError("extraction called without a hit")


def _p3_bitset(g: Graph) -> PathWitness | None:
    adj = g.adj
    two_step: dict[int, int] = {}
    for u, w in equal_degree_pairs(g):
        bu, bw = 1 << u, 1 << w
        if adj[u] & bw:
            # adjacent endpoints: scan u's neighbors directly
            skip = ~bu
            for a in _bits(adj[u] & ~bw):
                if adj[a] & adj[w] & skip & ~(1 << a):
                    return _p3_extract(g, u, w)
        else:
            # non-adjacent: one intersection against the union of w's
            # neighborhoods (the middle edge test aggregated over b)
            reach = two_step.get(w)
            if reach is None:
                reach = 0
                for b in _bits(adj[w]):
                    reach |= adj[b]
                two_step[w] = reach
            if adj[u] & reach:
                return _p3_extract(g, u, w)
    return None


def _p3_dense(g: Graph) -> PathWitness | None:
    """Count u-a-b-w paths for all pairs at once via adjacency powers.

    Exact in float64 because every entry stays far below 2**53.
    """
    n = g.order
    nbytes = (n + 7) // 8
    raw = b"".join(row.to_bytes(nbytes, "little") for row in g.adj)
    bits = np.unpackbits(np.frombuffer(raw, np.uint8).reshape(n, nbytes),
                         axis=1, bitorder="little")[:, :n]
    a = bits.astype(np.float64)
    deg = a.sum(axis=1)
    walks3 = (a @ a) @ a
    # remove walks that reuse an endpoint; only relevant for adjacent pairs
    paths = walks3 - a * (deg[:, None] + deg[None, :] - 1.0)
    hits = (paths > 0.5) & (deg[:, None] == deg[None, :])
    hits &= np.triu(np.ones((n, n), dtype=bool), 1)
    if not hits.any():
        return None
    u, w = map(int, np.argwhere(hits)[0])
    return _p3_extract(g, u, w)


def has_equal_degree_p3(g: Graph) -> PathWitness | None:
    """Length-3 fast path; verdict always identical to has_equal_degree_path(g, 3)."""
    if g.order >= _DENSE_MIN_ORDER:
        return _p3_dense(g)
    return _p3_bitset(g)
