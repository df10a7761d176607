import random
from itertools import combinations

import pytest

from cosr import (
    Graph,
    augment,
    convex_bipartite_deletion,
    cop_order,
    cos_r,
    delete_rows,
    derived_graph,
    find_helly_violation,
    find_uncovered_clique,
    half_adjacency,
    parse_matrix,
    set_system,
    verify_cop,
    vert,
)
from cosr.solver import _find_rule2_cycle
from cosr.oracle import brute_cop, brute_cosr, brute_maximal_cliques, random_instance

M1 = parse_matrix("3 8\n1 1 1 1 1 0 0 0\n0 1 0 0 1 1 1 0\n1 0 1 1 0 1 0 1\n")
M2 = parse_matrix("3 8\n1 0 1 0 1 1 0 0\n0 1 0 1 0 1 1 0\n1 0 0 0 0 1 0 1\n")
COMPLEMENT_IDENT4 = parse_matrix("4 4\n0111\n1011\n1101\n1110\n")


def feasible_sets(M, d):
    out = []
    for k in range(d + 1):
        for combo in combinations(sorted(M.row_ids), k):
            if brute_cop(delete_rows(M, combo)) is not None:
                out.append(frozenset(combo))
    return out


def test_examples_m1():
    assert not cos_r(M1, 0).feasible
    rep = cos_r(M1, 1)
    assert rep.feasible and len(rep.solution) == 1
    assert verify_cop(delete_rows(M1, rep.solution), rep.certificate)


def test_examples_complement_ident4():
    assert not cos_r(COMPLEMENT_IDENT4, 1).feasible
    rep = cos_r(COMPLEMENT_IDENT4, 2)
    assert rep.feasible and len(rep.solution) == 2


def test_cop_matrix_needs_nothing():
    M = parse_matrix("2 3\n110\n011\n")
    rep = cos_r(M, 0)
    assert rep.feasible and rep.solution == frozenset()
    assert rep.stats.internal_nodes == 0


def test_negative_budget_rejected():
    with pytest.raises(ValueError):
        cos_r(M1, -1)


def test_verdicts_match_oracle():
    for seed in range(120):
        m = 3 + seed % 6
        n = 3 + (seed // 6) % 6
        M = random_instance(seed + 7000, m, n, (0.3, 0.5, 0.7)[seed % 3])
        best = brute_cosr(M, 3)
        for d in range(4):
            rep = cos_r(M, d)
            assert rep.feasible == (best is not None and len(best) <= d)
            if rep.feasible:
                assert len(rep.solution) <= d
                assert verify_cop(delete_rows(M, rep.solution), rep.certificate)


def test_branch_candidates_hit_every_feasible_solution():
    # whichever rule fires first, every deletion set that works within
    # the budget must contain at least one branched row
    for seed in range(160):
        M = random_instance(seed + 11000, 4 + seed % 5, 4 + seed % 5, 0.45)
        viol = find_helly_violation(set_system(M))
        if viol is not None:
            branch = set(viol.rows)
        else:
            cycle = _find_rule2_cycle(M)
            if cycle is not None:
                branch = set(cycle)
            else:
                uncovered = find_uncovered_clique(M)
                if uncovered is None:
                    continue
                branch = set(sorted(uncovered[1])[:3])
        for sol in feasible_sets(M, 3):
            assert sol & branch, (M.rows, sorted(branch), sorted(sol))


def test_rule3_branch_hits_solutions_on_uncovered_family():
    M = COMPLEMENT_IDENT4
    assert find_helly_violation(set_system(M)) is None
    assert _find_rule2_cycle(M) is None
    _, core = find_uncovered_clique(M)
    branch = set(sorted(core)[:3])
    for sol in feasible_sets(M, 3):
        assert sol & branch


def test_leaf_state_is_rule_clean_and_clique_matrix():
    leaves = []

    def grab(matrix, budget):
        leaves.append((matrix, budget))

    for seed in range(40):
        M = random_instance(seed + 13000, 4 + seed % 5, 4 + seed % 4, 0.4)
        cos_r(M, 2, on_leaf=grab)
    assert leaves
    for matrix, budget in leaves:
        assert find_helly_violation(set_system(matrix)) is None
        assert _find_rule2_cycle(matrix) is None
        assert find_uncovered_clique(matrix) is None
        zero = {r for r, mask in zip(matrix.row_ids, matrix.rows) if mask == 0}
        live = delete_rows(matrix, zero)
        verts = {vert(live, c) for c in live.col_ids}
        assert set(brute_maximal_cliques(derived_graph(live))) <= verts
        aug = augment(live)
        assert set(brute_maximal_cliques(derived_graph(aug))) == {
            vert(aug, c) for c in aug.col_ids
        }


def test_leaf_where_identity_deletion_would_cheat():
    # three-rule-clean matrix on which unrestricted interval deletion of
    # the augmented derived graph finds a single-vertex fix through the
    # identity block, even though no single row deletion reaches COP; the
    # solver must say NO at budget 1 and recover at budget 2
    M = parse_matrix(
        "6 8\n"
        "1 0 0 0 1 0 1 0\n"
        "0 1 0 1 1 1 1 1\n"
        "1 1 1 1 0 1 1 1\n"
        "0 1 0 0 1 1 1 1\n"
        "1 0 1 0 0 0 1 1\n"
        "1 1 0 1 1 1 1 1\n"
    )
    assert find_helly_violation(set_system(M)) is None
    assert _find_rule2_cycle(M) is None
    assert find_uncovered_clique(M) is None
    from cosr import interval_deletion

    aug = augment(M)
    graph = derived_graph(aug)
    unrestricted = interval_deletion(graph, 1)
    assert unrestricted is not None and unrestricted <= aug.identity_rows
    assert interval_deletion(graph, 1, forbidden=aug.identity_rows) is None

    assert brute_cosr(M, 1) is None
    assert not cos_r(M, 1).feasible
    rep = cos_r(M, 2)
    assert rep.feasible and len(rep.solution) == 2


def test_solver_handles_all_zero_rows():
    M = parse_matrix("4 8\n1 1 1 1 1 0 0 0\n0 1 0 0 1 1 1 0\n1 0 1 1 0 1 0 1\n0 0 0 0 0 0 0 0\n")
    assert not cos_r(M, 0).feasible
    rep = cos_r(M, 1)
    assert rep.feasible and len(rep.solution) == 1 and 4 not in rep.solution
    assert brute_cosr(M, 1) is not None


def test_solution_never_contains_identity_labels():
    for seed in range(60):
        M = random_instance(seed + 17000, 5, 5, 0.4)
        rep = cos_r(M, 3)
        if rep.feasible:
            assert all(r > 0 for r in rep.solution)
            assert rep.solution <= set(M.row_ids)


def test_augmentation_preserves_cop_under_deletion():
    rng = random.Random(5)
    for seed in range(80):
        M = random_instance(seed + 19000, 5, 5, 0.5)
        aug = augment(M)
        drop = frozenset(rng.sample(sorted(M.row_ids), rng.randint(0, 3)))
        lhs = cop_order(delete_rows(M, drop)) is not None
        rhs = cop_order(delete_rows(aug, drop)) is not None
        assert lhs == rhs


def test_exhaustive_all_3x3_matrices():
    for bits in range(1 << 9):
        rows = tuple((bits >> (3 * i)) & 7 for i in range(3))
        M = parse_matrix(
            "3 3\n" + "\n".join("".join(str(r >> j & 1) for j in range(3)) for r in rows)
        )
        best = brute_cosr(M, 3)
        for d in range(3):
            rep = cos_r(M, d)
            assert rep.feasible == (best is not None and len(best) <= d)
            if rep.feasible:
                assert verify_cop(delete_rows(M, rep.solution), rep.certificate)


def test_degenerate_inputs_have_cop():
    empty = parse_matrix("0 3\n")
    rep = cos_r(empty, 0)
    assert rep.feasible and rep.solution == frozenset() and rep.certificate == (1, 2, 3)
    one_col = parse_matrix("2 1\n1\n1\n")
    assert cos_r(one_col, 0).feasible


def test_branch_node_bound():
    for seed in range(80):
        M = random_instance(seed + 23000, 5 + seed % 4, 5 + seed % 4, 0.5)
        for d in range(4):
            rep = cos_r(M, d)
            assert rep.stats.internal_nodes <= (4 ** (d + 1) - 1) // 3


def test_report_text_format():
    rep = cos_r(M1, 1)
    lines = rep.to_text().splitlines()
    assert lines[0] == "YES"
    assert lines[1] == " ".join(str(r) for r in sorted(rep.solution))
    assert lines[2] == " ".join(str(c) for c in rep.certificate)
    assert cos_r(M1, 0).to_text() == "NO\n"


def bipartite_from_matrix(M):
    n1, n2 = M.m, M.n
    edges = []
    for i, label in enumerate(M.row_ids):
        for col in sorted(M.row_set(label)):
            edges.append((i + 1, n1 + col))
    return Graph(range(1, n1 + n2 + 1), edges), frozenset(range(1, n1 + 1))


def test_half_adjacency_examples():
    single, side = Graph([1, 2], [(1, 2)]), {1}
    M = half_adjacency(single, side)
    assert (M.m, M.n) == (1, 1) and M.rows == (1,)

    k22 = Graph(range(1, 5), [(1, 3), (1, 4), (2, 3), (2, 4)])
    M = half_adjacency(k22, {1, 2})
    assert M.rows == (3, 3)

    edgeless = Graph(range(1, 5))
    assert half_adjacency(edgeless, {1, 2}).rows == (0, 0)

    with pytest.raises(ValueError):
        half_adjacency(Graph([1, 2, 3], [(1, 2)]), {1, 2})
    with pytest.raises(ValueError):
        half_adjacency(Graph([1, 2, 3], [(2, 3)]), {1})


def test_convex_bipartite_examples():
    g, side = bipartite_from_matrix(parse_matrix("2 3\n110\n011\n"))
    rep = convex_bipartite_deletion(g, side, 0)
    assert rep.feasible and rep.solution == frozenset()

    g1, side1 = bipartite_from_matrix(M1)
    assert not convex_bipartite_deletion(g1, side1, 0).feasible
    rep = convex_bipartite_deletion(g1, side1, 1)
    assert rep.feasible and len(rep.solution) == 1 and rep.solution <= side1


def test_convex_bipartite_matches_matrix_setting():
    for seed in range(40):
        M = random_instance(seed + 29000, 4 + seed % 4, 4 + seed % 4, 0.4)
        g, side = bipartite_from_matrix(M)
        best = brute_cosr(M, 2)
        for d in range(3):
            rep = convex_bipartite_deletion(g, side, d)
            assert rep.feasible == (best is not None and len(best) <= d)
            if rep.feasible:
                assert rep.solution <= side
