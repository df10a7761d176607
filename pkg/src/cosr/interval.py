"""Interval graph recognition and exact interval vertex deletion.

Recognition follows the Fulkerson-Gross characterization: a graph is
interval iff it is chordal and its clique matrix (vertices x maximal
cliques) has the consecutive ones property. The deletion solver is an
exact branch-and-search: it branches over an obstruction witness (a
shortest chordless cycle, or the paths of an asteroidal triple) and
falls back to exhaustive subset search if the branch tree outgrows a
node budget, so the answer is exact regardless of input shape.
"""

from __future__ import annotations

from itertools import combinations

from .cop import cop_order
from .errors import ContractError
from .graphs import Graph, is_chordal, maximal_cliques_chordal
from .matrix import BinaryMatrix


def clique_matrix(G: Graph, cliques: list[frozenset[int]]) -> BinaryMatrix:
    """Vertices-by-cliques incidence matrix; rows carry the vertex labels."""
    rows = []
    for v in G.vertices:
        mask = 0
        for j, clique in enumerate(cliques):
            if v in clique:
                mask |= 1 << j
        rows.append(mask)
    return BinaryMatrix(
        row_ids=G.vertices,
        col_ids=tuple(range(1, len(cliques) + 1)),
        rows=tuple(rows),
    )


def is_interval(G: Graph) -> bool:
    """True iff ``G`` is an interval graph."""
    peo = is_chordal(G)
    if peo is None:
        return False
    cliques = maximal_cliques_chordal(G, peo)
    return cop_order(clique_matrix(G, cliques)) is not None


def _bfs_path(G: Graph, start: int, goal: int, banned: set[int]) -> list[int] | None:
    """Shortest start-goal path avoiding ``banned``; ties prefer small labels."""
    if start in banned or goal in banned:
        return None
    parent: dict[int, int | None] = {start: None}
    frontier = [start]
    while frontier:
        nxt: list[int] = []
        for u in frontier:
            for w in sorted(G.neighbors(u)):
                if w in banned or w in parent:
                    continue
                parent[w] = u
                if w == goal:
                    path = [w]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    return path[::-1]
                nxt.append(w)
        frontier = nxt
    return None


def _shortest_hole(G: Graph) -> list[int] | None:
    """A shortest chordless cycle of length >= 4, in cyclic order.

    For every vertex v and non-adjacent pair x, y of its neighbors, the
    shortest x-y path avoiding the rest of N[v] closes a chordless cycle
    through v; minimizing over all choices yields a shortest hole.
    """
    best: list[int] | None = None
    for v in G.vertices:
        nbrs = sorted(G.neighbors(v))
        for i, x in enumerate(nbrs):
            for y in nbrs[i + 1 :]:
                if G.has_edge(x, y):
                    continue
                banned = (set(nbrs) | {v}) - {x, y}
                path = _bfs_path(G, x, y, banned)
                if path is None:
                    continue
                cycle = [v] + path
                if best is None or len(cycle) < len(best):
                    best = cycle
    return best


def _asteroidal_witness(G: Graph) -> frozenset[int] | None:
    """Vertices of an asteroidal triple plus its three connecting paths.

    A triple of pairwise non-adjacent vertices is asteroidal when every
    pair is joined by a path avoiding the closed neighborhood of the
    third; interval graphs contain none, so any feasible deletion set
    must meet the witness vertex set returned here.
    """
    vs = G.vertices
    closed = {v: G.neighbors(v) | {v} for v in vs}
    for a, b, c in combinations(vs, 3):
        if G.has_edge(a, b) or G.has_edge(a, c) or G.has_edge(b, c):
            continue
        p_ab = _bfs_path(G, a, b, set(closed[c]))
        if p_ab is None:
            continue
        p_ac = _bfs_path(G, a, c, set(closed[b]))
        if p_ac is None:
            continue
        p_bc = _bfs_path(G, b, c, set(closed[a]))
        if p_bc is None:
            continue
        return frozenset(p_ab) | frozenset(p_ac) | frozenset(p_bc)
    return None


class _NodeBudgetExceeded(Exception):
    pass


def _branch(
    G: Graph, d: int, forbidden: frozenset[int], counter: list[int], limit: int
) -> frozenset[int] | None:
    counter[0] += 1
    if counter[0] > limit:
        raise _NodeBudgetExceeded
    if is_interval(G):
        return frozenset()
    if d <= 0:
        return None
    if is_chordal(G) is None:
        witness = _shortest_hole(G)
        assert witness is not None, "non-chordal graph must contain a hole"
    else:
        witness = _asteroidal_witness(G)
        assert witness is not None, "chordal non-interval graph must contain an asteroidal triple"
    # Any feasible deletion set must meet the witness; one avoiding the
    # forbidden vertices must meet its allowed part.
    for v in sorted(set(witness) - forbidden):
        sub = _branch(G.without({v}), d - 1, forbidden, counter, limit)
        if sub is not None:
            return sub | {v}
    return None


def _subset_search(G: Graph, d: int, forbidden: frozenset[int]) -> frozenset[int] | None:
    allowed = [v for v in G.vertices if v not in forbidden]
    for k in range(d + 1):
        for combo in combinations(allowed, k):
            if is_interval(G.without(combo)):
                return frozenset(combo)
    return None


def interval_deletion(
    G: Graph,
    d: int,
    node_limit: int = 200_000,
    forbidden: frozenset[int] = frozenset(),
) -> frozenset[int] | None:
    """An inclusion-minimal set of at most ``d`` vertices whose removal
    leaves an interval graph, or None when no such set exists.

    Exact: None is returned only on genuinely infeasible instances. A
    negative budget is infeasible by definition. Branching explores
    witness vertices in ascending label order, so results are
    deterministic; if the branch tree exceeds ``node_limit`` nodes the
    solver restarts as an exhaustive search over deletion subsets in
    increasing size. Vertices in ``forbidden`` are never deleted, which
    restricts the search to solutions avoiding them (None then means no
    such restricted solution exists).
    """
    if d < 0:
        return None
    try:
        solution = _branch(G, d, forbidden, [0], node_limit)
    except _NodeBudgetExceeded:
        solution = _subset_search(G, d, forbidden)
    if solution is None:
        return None
    return minimalize_solution(G, solution)


def minimalize_solution(G: Graph, deleted: frozenset[int]) -> frozenset[int]:
    """Shrink a feasible deletion set until it is inclusion-minimal.

    Redundant vertices are discarded highest label first, which keeps
    the smallest-labeled representative when several single vertices
    would do. Requires that ``G`` minus ``deleted`` is already interval.
    """
    deleted = frozenset(deleted)
    if not is_interval(G.without(deleted)):
        raise ContractError("deletion set does not leave an interval graph")
    current = set(deleted)
    for v in sorted(deleted, reverse=True):
        if is_interval(G.without(current - {v})):
            current.discard(v)
    return frozenset(current)
