"""Immutable bitset graphs, graph6 serialization, and canonical labeling.

Vertices are dense integers 0..order-1.  Adjacency rows are Python ints used
as bitsets, so the same representation covers both the exhaustive-search
range (order <= 10) and construction checks at a few hundred vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "Graph",
    "Graph6Error",
    "DegreeProfile",
    "CanonicalForm",
    "from_edges",
    "complement",
    "relabel",
    "degree_profile",
    "to_graph6",
    "from_graph6",
    "canonical_form",
    "canonical_bytes",
    "canonical_graph",
    "automorphism_generators",
    "vertex_orbits",
    "is_isomorphic",
]


class Graph6Error(ValueError):
    """Malformed graph6 data.  Carries the offset of the offending byte."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


def _bits(mask: int):
    """Yield set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph with bitset adjacency rows.

    adj[i] has bit j set iff {i, j} is an edge.  Rows must be symmetric and
    loop-free; the public constructors guarantee that.  Instances are
    immutable and hashable.
    """

    __slots__ = ("order", "adj")

    def __init__(self, order: int, adj: tuple[int, ...]):
        if order < 0:
            raise ValueError("order must be nonnegative")
        adj = tuple(adj)
        if len(adj) != order:
            raise ValueError(f"expected {order} adjacency rows, got {len(adj)}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "adj", adj)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __delattr__(self, name):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.adj == other.adj

    def __hash__(self):
        return hash((self.order, self.adj))

    def __repr__(self):
        return f"Graph(order={self.order}, edges={self.edge_count()})"

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.order):
            for v in _bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def add_vertex(self, neighbor_mask: int) -> "Graph":
        """New graph with one extra vertex adjacent to the masked vertices."""
        n = self.order
        if neighbor_mask >> n:
            raise ValueError("neighbor mask addresses vertices beyond the order")
        new_bit = 1 << n
        rows = [row | new_bit if neighbor_mask >> i & 1 else row
                for i, row in enumerate(self.adj)]
        rows.append(neighbor_mask)
        return Graph(n + 1, tuple(rows))

    def check(self) -> None:
        """Assert symmetry and irreflexivity.  Test helper, not a hot path."""
        for i, row in enumerate(self.adj):
            if row >> i & 1:
                raise AssertionError(f"loop at vertex {i}")
            if row >> self.order:
                raise AssertionError(f"row {i} addresses nonexistent vertices")
            for j in _bits(row):
                if not self.adj[j] >> i & 1:
                    raise AssertionError(f"asymmetric pair ({i}, {j})")


def from_edges(order: int, edges) -> Graph:
    """Build a graph from an edge list, rejecting loops and bad endpoints."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    rows = [0] * order
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop edge ({u}, {v}) is not allowed")
        if not (0 <= u < order and 0 <= v < order):
            raise ValueError(f"edge ({u}, {v}) out of range for order {order}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(order, tuple(rows))


def complement(g: Graph) -> Graph:
    n = g.order
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(g.adj)))


def relabel(g: Graph, perm) -> Graph:
    """Apply a vertex permutation; perm[v] is the new label of v."""
    n = g.order
    perm = tuple(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError("perm is not a permutation of the vertex set")
    rows = [0] * n
    for v in range(n):
        m = 0
        for u in _bits(g.adj[v]):
            m |= 1 << perm[u]
        rows[perm[v]] = m
    return Graph(n, tuple(rows))


@dataclass(frozen=True)
class DegreeProfile:
    """Degree diagnostics: the raw sequence plus summary statistics.

    max_repeated_degree is the largest degree attained by at least two
    vertices; it is None only when no degree repeats, which forces order <= 1.
    max_degree is None for the empty graph on zero vertices.
    """

    degrees: tuple[int, ...]
    max_degree: int | None
    max_repeated_degree: int | None
    distinct_count: int


def degree_profile(g: Graph) -> DegreeProfile:
    degs = g.degrees()
    if not degs:
        return DegreeProfile((), None, None, 0)
    seen: dict[int, int] = {}
    for d in degs:
        seen[d] = seen.get(d, 0) + 1
    repeated = [d for d, c in seen.items() if c >= 2]
    return DegreeProfile(
        degrees=degs,
        max_degree=max(degs),
        max_repeated_degree=max(repeated) if repeated else None,
        distinct_count=len(seen),
    )


# ---------------------------------------------------------------------------
# graph6 (small format, order < 63)
# ---------------------------------------------------------------------------

def _pair_bits(g: Graph) -> int:
    """Upper-triangle adjacency bits in column order (0,1),(0,2),(1,2),...

    Packed into an int with the first pair as the most significant bit.
    """
    bits = 0
    adj = g.adj
    for j in range(1, g.order):
        row = adj[j]
        for i in range(j):
            bits = bits << 1 | (row >> i & 1)
    return bits


def _pack_graph6(order: int, bits: int) -> bytes:
    npairs = order * (order - 1) // 2
    out = bytearray([63 + order])
    ngroups = (npairs + 5) // 6
    x = bits << (6 * ngroups - npairs)
    for k in range(ngroups - 1, -1, -1):
        out.append(63 + (x >> 6 * k & 63))
    return bytes(out)


def to_graph6(g: Graph) -> bytes:
    """Encode in the fixed-width graph6 small format."""
    if g.order >= 63:
        raise Graph6Error(f"order {g.order} does not fit the small format", offset=0)
    return _pack_graph6(g.order, _pair_bits(g))


def from_graph6(data: bytes | str) -> Graph:
    """Decode one graph6 record, rejecting any malformed or surplus bytes."""
    if isinstance(data, str):
        data = data.encode("ascii")
    if not data:
        raise Graph6Error("empty input", offset=0)
    b0 = data[0]
    if b0 == 126:
        raise Graph6Error("order 63 or larger is not supported", offset=0)
    if not 63 <= b0 <= 125:
        raise Graph6Error(f"invalid byte {b0}", offset=0)
    n = b0 - 63
    npairs = n * (n - 1) // 2
    ngroups = (npairs + 5) // 6
    if len(data) < 1 + ngroups:
        raise Graph6Error("truncated adjacency section", offset=len(data))
    if len(data) > 1 + ngroups:
        raise Graph6Error("unexpected trailing byte", offset=1 + ngroups)
    bits = 0
    for k in range(ngroups):
        b = data[1 + k]
        if not 63 <= b <= 126:
            raise Graph6Error(f"invalid byte {b}", offset=1 + k)
        bits = bits << 6 | (b - 63)
    pad = 6 * ngroups - npairs
    if pad and bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", offset=ngroups)
    bits >>= pad
    rows = [0] * n
    pos = npairs
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if bits >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# Canonical labeling
# ---------------------------------------------------------------------------
#
# Degree-based partition refinement followed by backtracking over the
# orderings compatible with the refined partition.  The canonical string is
# the lexicographically smallest upper-triangle bit sequence reachable that
# way; the contract is label-invariance and determinism, nothing else.
# Automorphisms found as equal-string leaves prune sibling branches and are
# reported to callers (the enumeration engine needs them).

def _refine(adj, cells, shift):
    """Refine an ordered partition until it is equitable.

    Cells are lists of vertices.  A cell splits by the vector of neighbor
    counts into every current cell; fragments are ordered by that vector, so
    the result depends only on the partition and the graph, not on labels.
    """
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            buckets: dict[int, list[int]] = {}
            for v in c:
                row = adj[v]
                sig = 0
                for m in masks:
                    sig = sig << shift | (row & m).bit_count()
                b = buckets.get(sig)
                if b is None:
                    buckets[sig] = [v]
                else:
                    b.append(v)
            if len(buckets) == 1:
                out.append(c)
            else:
                changed = True
                for sig in sorted(buckets):
                    out.append(buckets[sig])
        if not changed:
            return out
        cells = out


def _closure(gens, start: int) -> set[int]:
    """Orbit of a vertex under the group generated by gens."""
    orbit = {start}
    frontier = [start]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = g[x]
            if y not in orbit:
                orbit.add(y)
                frontier.append(y)
    return orbit


def _canon_core(adj, n: int):
    """Return (canonical pair bits, canonical vertex order, generators).

    The generators are vertex permutations (tuples) that together generate
    the automorphism group; they fall out of the leaf comparisons.
    """
    if n == 0:
        return 0, (), []
    if n == 1:
        return 0, (0,), []
    total = n * (n - 1) // 2
    shift = n.bit_length()
    best_bits: int | None = None
    best_seq: tuple[int, ...] = ()
    gens: list[tuple[int, ...]] = []

    def rec(cells, pref: int, spos: int, fixed: tuple[int, ...]):
        nonlocal best_bits, best_seq
        seq = []
        for c in cells:
            if len(c) != 1:
                break
            seq.append(c[0])
        s = len(seq)
        for j in range(spos, s):
            row = adj[seq[j]]
            col = 0
            for i in range(j):
                col = col << 1 | (row >> seq[i] & 1)
            pref = pref << j | col
        if best_bits is not None:
            if pref > best_bits >> (total - s * (s - 1) // 2):
                return
        if s == n:
            if best_bits is None or pref < best_bits:
                best_bits = pref
                best_seq = tuple(seq)
            elif pref == best_bits:
                perm = [0] * n
                for i in range(n):
                    perm[best_seq[i]] = seq[i]
                if any(perm[i] != i for i in range(n)):
                    p = tuple(perm)
                    if p not in gens:
                        gens.append(p)
            return
        cell = cells[s]
        explored: list[int] = []
        for v in cell:
            if explored and gens:
                stab = [g for g in gens if all(g[x] == x for x in fixed)]
                if stab and _closure(stab, v).intersection(explored):
                    continue
            rest = [x for x in cell if x != v]
            child = cells[:s] + [[v], rest] + cells[s + 1:]
            rec(_refine(adj, child, shift), pref, s, fixed + (v,))
            explored.append(v)

    rec(_refine(adj, [list(range(n))], shift), 0, 0, ())
    return best_bits, best_seq, gens


@dataclass(frozen=True)
class CanonicalForm:
    """Label-invariant fingerprint: equal forms mean isomorphic graphs.

    data is the graph6 encoding of the canonically relabeled graph, which
    makes forms sortable, printable, and decodable back into a graph.
    """

    order: int
    data: bytes


def canonical_bytes(g: Graph) -> bytes:
    """graph6 encoding of the canonical relabeling of g."""
    if g.order >= 63:
        raise Graph6Error(f"order {g.order} does not fit the small format", offset=0)
    bits, _, _ = _canon_core(g.adj, g.order)
    return _pack_graph6(g.order, bits)


def canonical_form(g: Graph) -> CanonicalForm:
    return CanonicalForm(g.order, canonical_bytes(g))


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class."""
    return from_graph6(canonical_bytes(g))


def automorphism_generators(g: Graph) -> list[tuple[int, ...]]:
    """Generators of the automorphism group (empty list for rigid graphs)."""
    _, _, gens = _canon_core(g.adj, g.order)
    return gens


def vertex_orbits(g: Graph) -> list[list[int]]:
    """Automorphism orbits of the vertex set, each sorted, ordered by minimum."""
    n = g.order
    gens = automorphism_generators(g)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in gens:
        for v in range(n):
            a, b = find(v), find(p[v])
            if a != b:
                parent[a] = b
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.order == h.order and canonical_bytes(g) == canonical_bytes(h)
