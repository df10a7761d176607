"""Recursive branching solver for consecutive-ones row deletion.

Given a binary matrix and a budget d, decide whether deleting at most d
rows leaves a matrix with the consecutive ones property, and produce the
rows plus a column-order certificate when it does. Each call first tries
the cheap exits (already consecutive-ones; budget exhausted), then fires
the first applicable of three branching rules:

1. three pairwise-intersecting row sets with an empty common
   intersection, or none of which lies in the union of the other two
   (no interval family can realize either pattern);
2. an induced 4-cycle inside the subgraph spanned by two columns'
   vertex sets (forbidden in any interval graph);
3. a maximal clique of the derived graph realized by no column,
   shrunk to an inclusion-minimal uncovered core.

Each rule deletes one row per child and lowers the budget, so the branch
tree has at most 4^d internal splits. When no rule applies, the identity
augmentation turns the matrix into the clique matrix of its derived
graph and the residue is solved exactly as interval vertex deletion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .graphs import Graph, derived_graph, find_c4, find_helly_violation, find_uncovered_clique, pair_subgraph
from .interval import interval_deletion
from .cop import cop_order, verify_cop
from .matrix import BinaryMatrix, augment, delete_rows, set_system


@dataclass
class SolveStats:
    """Counters describing one solver run."""

    rule1: int = 0
    rule2: int = 0
    rule3: int = 0
    leaves: int = 0

    @property
    def internal_nodes(self) -> int:
        return self.rule1 + self.rule2 + self.rule3

    def as_dict(self) -> dict[str, int]:
        return {
            "internal_nodes": self.internal_nodes,
            "leaves": self.leaves,
            "rule1": self.rule1,
            "rule2": self.rule2,
            "rule3": self.rule3,
        }


@dataclass(frozen=True)
class SolveReport:
    """Outcome of a solver run.

    On YES, ``solution`` holds row labels of the original matrix whose
    deletion leaves a consecutive-ones matrix and ``certificate`` is a
    verified column order for the surviving matrix.
    """

    feasible: bool
    solution: frozenset[int] | None
    certificate: tuple[int, ...] | None
    stats: SolveStats = field(default_factory=SolveStats)

    def to_text(self) -> str:
        if not self.feasible:
            return "NO\n"
        rows = " ".join(str(r) for r in sorted(self.solution))
        cert = " ".join(str(c) for c in self.certificate)
        return f"YES\n{rows}\n{cert}\n"


def _find_rule2_cycle(M: BinaryMatrix) -> tuple[int, ...] | None:
    """Rows of the first induced 4-cycle over all column-pair subgraphs."""
    for i in range(M.n):
        for j in range(i + 1, M.n):
            cycle = find_c4(pair_subgraph(M, M.col_ids[i], M.col_ids[j]))
            if cycle is not None:
                return cycle
    return None


def _solve(
    matrix: BinaryMatrix,
    accumulated: frozenset[int],
    budget: int,
    stats: SolveStats,
    on_leaf: Callable[[BinaryMatrix, int], None] | None,
) -> frozenset[int] | None:
    # Step 0: done if the matrix already has the property.
    if budget >= 0 and cop_order(matrix) is not None:
        return accumulated
    # Step 1: budget exhausted.
    if budget < 0:
        return None

    branch_rows: Iterable[int] | None = None
    violation = find_helly_violation(set_system(matrix))
    if violation is not None:
        stats.rule1 += 1
        branch_rows = violation.rows
    else:
        cycle = _find_rule2_cycle(matrix)
        if cycle is not None:
            stats.rule2 += 1
            branch_rows = cycle
        else:
            uncovered = find_uncovered_clique(matrix)
            if uncovered is not None:
                stats.rule3 += 1
                _, core = uncovered
                branch_rows = sorted(core)[:3]

    if branch_rows is not None:
        for row in sorted(branch_rows):
            result = _solve(
                delete_rows(matrix, {row}),
                accumulated | {row},
                budget - 1,
                stats,
                on_leaf,
            )
            if result is not None:
                return result
        return None

    # Step 5: no rule applies; the augmented matrix is the clique matrix
    # of its derived graph and the residue reduces to interval deletion.
    # Deletion is confined to original-row vertices: an unrestricted
    # solution may consume budget on identity vertices without making
    # the matrix side feasible, and restricting loses no exactness
    # because the three-rule-clean state survives original-row deletion.
    stats.leaves += 1
    if on_leaf is not None:
        on_leaf(matrix, budget)
    aug = augment(matrix)
    graph = derived_graph(aug)
    removed = interval_deletion(graph, budget, forbidden=aug.identity_rows)
    # Step 6: map deleted vertices back to rows of the original matrix.
    if removed is None:
        return None
    assert not removed & aug.identity_rows
    return accumulated | {graph.origin[v] for v in removed}


def cos_r(
    M: BinaryMatrix,
    d: int,
    on_leaf: Callable[[BinaryMatrix, int], None] | None = None,
) -> SolveReport:
    """Decide d-COS-R exactly and certify YES answers.

    ``on_leaf`` is an optional instrumentation hook invoked with the leaf
    matrix and remaining budget just before each interval-deletion call;
    it is meant for invariant checking in tests and must not mutate its
    arguments.
    """
    if d < 0:
        raise ValueError("deletion budget must be non-negative")
    stats = SolveStats()
    solution = _solve(M, frozenset(), d, stats, on_leaf)
    if solution is None:
        return SolveReport(False, None, None, stats)
    assert len(solution) <= d
    survivor = delete_rows(M, solution)
    certificate = cop_order(survivor)
    assert certificate is not None and verify_cop(survivor, certificate)
    return SolveReport(True, solution, certificate, stats)


def half_adjacency(G: Graph, side_one: Iterable[int]) -> BinaryMatrix:
    """The |V1| x |V2| half adjacency matrix of a bipartite graph.

    Rows are labeled by the V1 vertex labels; columns are numbered
    1..|V2| following the sorted V2 labels. An edge joining two vertices
    of the same side is rejected.
    """
    v1 = sorted(set(side_one))
    for v in v1:
        if v not in G.vertices:
            raise ValueError(f"side vertex {v} is not in the graph")
    v1_set = set(v1)
    v2 = [v for v in G.vertices if v not in v1_set]
    col_of = {v: j for j, v in enumerate(v2)}
    rows = {v: 0 for v in v1}
    for a, b in G.edges():
        if a in v1_set and b in v1_set:
            raise ValueError(f"edge ({a}, {b}) lies inside side one")
        if a not in v1_set and b not in v1_set:
            raise ValueError(f"edge ({a}, {b}) lies inside side two")
        x, y = (a, b) if a in v1_set else (b, a)
        rows[x] |= 1 << col_of[y]
    return BinaryMatrix(
        row_ids=tuple(v1),
        col_ids=tuple(range(1, len(v2) + 1)),
        rows=tuple(rows[v] for v in v1),
    )


def convex_bipartite_deletion(G: Graph, side_one: Iterable[int], d: int) -> SolveReport:
    """Delete at most ``d`` side-one vertices to make the graph convex.

    A bipartite graph is convex exactly when its half adjacency matrix
    has the consecutive ones property, so this is row deletion on that
    matrix; the returned solution holds side-one vertex labels.
    """
    return cos_r(half_adjacency(G, side_one), d)
