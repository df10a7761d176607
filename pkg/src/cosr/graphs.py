"""Simple undirected graphs and the structure detectors behind the solver.

Vertices are integer labels; adjacency is kept as one bitmask per vertex
over sorted-label positions. Derived graphs of a matrix use the row
labels as vertex labels, so matrix rows and graph vertices can be
identified without translation tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ContractError, ParseError
from .matrix import BinaryMatrix, SetSystem, _bits, _logical_lines, support


class Graph:
    """Immutable simple graph over integer vertex labels."""

    def __init__(
        self,
        vertices: Iterable[int],
        edges: Iterable[tuple[int, int]] = (),
        origin: dict[int, int] | None = None,
    ):
        self._vertices = tuple(sorted(set(vertices)))
        self._index = {v: i for i, v in enumerate(self._vertices)}
        self._adj = [0] * len(self._vertices)
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u not in self._index or v not in self._index:
                raise ValueError(f"edge ({u}, {v}) references a missing vertex")
            self._adj[self._index[u]] |= 1 << self._index[v]
            self._adj[self._index[v]] |= 1 << self._index[u]
        self.origin = dict(origin) if origin is not None else None

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def n(self) -> int:
        return len(self._vertices)

    def _require(self, v: int) -> int:
        if v not in self._index:
            raise ValueError(f"unknown vertex {v}")
        return self._index[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[self._require(u)] >> self._require(v) & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        mask = self._adj[self._require(v)]
        return frozenset(self._vertices[i] for i in _bits(mask))

    def degree(self, v: int) -> int:
        return self._adj[self._require(v)].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i, u in enumerate(self._vertices):
            mask = self._adj[i] >> (i + 1)
            for off in _bits(mask):
                out.append((u, self._vertices[i + 1 + off]))
        return out

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self._adj) // 2

    def subgraph(self, keep: Iterable[int]) -> "Graph":
        keep = set(keep)
        for v in keep:
            self._require(v)
        edges = [(u, v) for u, v in self.edges() if u in keep and v in keep]
        origin = None
        if self.origin is not None:
            origin = {v: r for v, r in self.origin.items() if v in keep}
        return Graph(keep, edges, origin)

    def without(self, drop: Iterable[int]) -> "Graph":
        drop = set(drop)
        return self.subgraph(set(self._vertices) - drop)

    def is_clique(self, members: Iterable[int]) -> bool:
        idxs = [self._require(v) for v in set(members)]
        mask = 0
        for i in idxs:
            mask |= 1 << i
        return all(mask & ~(self._adj[i] | (1 << i)) == 0 for i in idxs)

    def common_neighbor_mask(self, members: Iterable[int]) -> int:
        mask = (1 << self.n) - 1
        mem = 0
        for v in members:
            i = self._require(v)
            mask &= self._adj[i]
            mem |= 1 << i
        return mask & ~mem

    def labels(self, mask: int) -> frozenset[int]:
        return frozenset(self._vertices[i] for i in _bits(mask))

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self._vertices == other._vertices
            and self._adj == other._adj
        )

    def __repr__(self):
        return f"Graph({list(self._vertices)}, {self.edges()})"


@dataclass(frozen=True)
class HellyViolation:
    """Three pairwise-intersecting row sets breaking an interval necessity.

    ``kind`` is "H1" when the triple has an empty common intersection and
    "H2" when none of the three sets lies inside the union of the other
    two. Rows of a matrix with the consecutive ones property can exhibit
    neither.
    """

    rows: tuple[int, int, int]
    kind: str


def derived_graph(M: BinaryMatrix) -> Graph:
    """One vertex per row; an edge where two rows share a 1-column."""
    edges = []
    for j in range(M.n):
        bit = 1 << j
        members = [label for label, mask in zip(M.row_ids, M.rows) if mask & bit]
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                edges.append((members[a], members[b]))
    return Graph(M.row_ids, edges, origin={label: label for label in M.row_ids})


def vert(M: BinaryMatrix, col: int) -> frozenset[int]:
    """Vertices of the derived graph whose rows support ``col``."""
    return support(M, col)


def find_helly_violation(S: SetSystem) -> HellyViolation | None:
    """First row triple (in matrix row order) violating H1 or H2.

    H1 is tested before H2 on each triple; triples are scanned in
    lexicographic order of row position so the result is deterministic.
    """
    labels = list(S.sets)
    sets = S.sets
    for i in range(len(labels)):
        a = sets[labels[i]]
        for j in range(i + 1, len(labels)):
            b = sets[labels[j]]
            if not a & b:
                continue
            for k in range(j + 1, len(labels)):
                c = sets[labels[k]]
                if not (a & c and b & c):
                    continue
                triple = (labels[i], labels[j], labels[k])
                if not a & b & c:
                    return HellyViolation(triple, "H1")
                if not (a <= b | c or b <= a | c or c <= a | b):
                    return HellyViolation(triple, "H2")
    return None


def pair_subgraph(M: BinaryMatrix, col_a: int, col_b: int) -> Graph:
    """Subgraph of the derived graph induced on vert(col_a) | vert(col_b)."""
    if col_a == col_b:
        raise ValueError("pair subgraph needs two distinct columns")
    keep = vert(M, col_a) | vert(M, col_b)
    return derived_graph(M).subgraph(keep)


def find_c4(G: Graph) -> tuple[int, int, int, int] | None:
    """An induced 4-cycle in cyclic order, or None.

    Scans non-adjacent vertex pairs in ascending label order for two
    non-adjacent common neighbors, so the first hit is deterministic.
    """
    vs = G.vertices
    for ai, a in enumerate(vs):
        for c in vs[ai + 1 :]:
            if G.has_edge(a, c):
                continue
            common = sorted(G.neighbors(a) & G.neighbors(c))
            for bi, b in enumerate(common):
                for d in common[bi + 1 :]:
                    if not G.has_edge(b, d):
                        return (a, b, c, d)
    return None


def _peo_holds(G: Graph, order: tuple[int, ...]) -> bool:
    position = {v: i for i, v in enumerate(order)}
    for i, v in enumerate(order):
        later = [u for u in G.neighbors(v) if position[u] > i]
        if later and not G.is_clique(later):
            return False
    return True


def is_chordal(G: Graph) -> tuple[int, ...] | None:
    """A perfect elimination ordering found by maximum-cardinality search.

    Returns None when the verification of the candidate ordering fails,
    which happens exactly on non-chordal graphs. Ties in the search are
    broken toward the smallest label, so chordal graphs always map to the
    same ordering.
    """
    if G.n == 0:
        return ()
    weight = {v: 0 for v in G.vertices}
    visit: list[int] = []
    remaining = set(G.vertices)
    while remaining:
        v = max(sorted(remaining), key=lambda u: weight[u])
        visit.append(v)
        remaining.discard(v)
        for u in G.neighbors(v):
            if u in remaining:
                weight[u] += 1
    order = tuple(reversed(visit))
    return order if _peo_holds(G, order) else None


def maximal_cliques_chordal(G: Graph, peo: tuple[int, ...]) -> list[frozenset[int]]:
    """All maximal cliques of a chordal graph, via its elimination order."""
    if sorted(peo) != list(G.vertices) or not _peo_holds(G, peo):
        raise ContractError("not a perfect elimination ordering of this graph")
    position = {v: i for i, v in enumerate(peo)}
    candidates: set[frozenset[int]] = set()
    for i, v in enumerate(peo):
        later = {u for u in G.neighbors(v) if position[u] > i}
        candidates.add(frozenset(later | {v}))
    cliques = [
        c for c in candidates if not any(c < other for other in candidates)
    ]
    return sorted(cliques, key=sorted)


def is_simplicial(G: Graph, v: int) -> bool:
    """True iff the neighborhood of ``v`` induces a clique."""
    return G.is_clique(G.neighbors(v))


def find_uncovered_clique(
    M: BinaryMatrix,
) -> tuple[frozenset[int], frozenset[int]] | None:
    """A maximal clique of the derived graph not realized by any column.

    Assumes no Helly violation and no induced 4-cycle in any column-pair
    subgraph, which makes every pair subgraph chordal and lets the pair
    scan enumerate every maximal clique of the derived graph. Returns the
    first uncovered clique Q (in canonical member order) together with an
    inclusion-minimal Q' of Q contained in no column's vertex set,
    obtained by greedy removal in ascending label order. None when every
    maximal clique equals some column's vertex set.

    Isolated vertices coming from all-zero rows belong to no column and
    are deliberately not treated as uncovered cliques; they cannot affect
    whether the matrix can reach the consecutive ones property.
    """
    G = derived_graph(M)
    verts = [vert(M, c) for c in M.col_ids]
    candidates: set[frozenset[int]] = set()
    for i in range(M.n):
        for j in range(i + 1, M.n):
            sub = G.subgraph(verts[i] | verts[j])
            peo = is_chordal(sub)
            if peo is None:
                raise ContractError(
                    f"pair subgraph of columns {M.col_ids[i]}, {M.col_ids[j]} is not chordal"
                )
            for clique in maximal_cliques_chordal(sub, peo):
                if G.common_neighbor_mask(clique) == 0:
                    candidates.add(clique)

    def covered(group: frozenset[int]) -> bool:
        return any(group <= vs for vs in verts)

    for clique in sorted(candidates, key=sorted):
        if covered(clique):
            continue
        minimal = set(clique)
        for v in sorted(clique):
            if len(minimal) > 1 and not covered(frozenset(minimal - {v})):
                minimal.discard(v)
        assert len(minimal) >= 3, "two clique members always share a column"
        return clique, frozenset(minimal)
    return None


def parse_graph(text: str) -> Graph:
    """Parse the graph file format: header "n m", then m lines "u v"."""
    lines = _logical_lines(text)
    try:
        header_no, header = next(lines)
    except StopIteration:
        raise ParseError(1, "missing header") from None
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError(header_no, f"expected header 'n m', got {header!r}")
    n, m = int(parts[0]), int(parts[1])
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for _ in range(m):
        try:
            no, line = next(lines)
        except StopIteration:
            raise ParseError(header_no, f"expected {m} edges, found {len(edges)}") from None
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(no, f"expected edge 'u v', got {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if not (1 <= u < v <= n):
            raise ParseError(no, f"edge ({u}, {v}) must satisfy 1 <= u < v <= {n}")
        if (u, v) in seen:
            raise ParseError(no, f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    extra = next(lines, None)
    if extra is not None:
        raise ParseError(extra[0], "trailing content after last edge")
    return Graph(range(1, n + 1), edges)


def serialize_graph(G: Graph) -> str:
    """Graph file text; vertices are renumbered 1..n by sorted label."""
    relabel = {v: i + 1 for i, v in enumerate(G.vertices)}
    lines = [f"{G.n} {G.edge_count()}"]
    for u, v in G.edges():
        a, b = sorted((relabel[u], relabel[v]))
        lines.append(f"{a} {b}")
    return "\n".join(lines) + "\n"
