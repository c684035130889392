import pytest

from certdom import (
    Graph,
    SizeLimitError,
    SolverConfig,
    all_min_dominating_sets,
    complete_bipartite_graph,
    complete_graph,
    corona,
    cycle_graph,
    empty_graph,
    fig1_graph,
    fig3a_graph,
    find_dd2_pair,
    gamma_cer_oracle,
    gamma_cer_solve,
    gamma_oracle,
    gamma_solve,
    is_certified_dominating,
    is_dd2_pair,
    is_dominating,
    path_graph,
    wheel_graph,
)
from certdom.suite import enumerate_labeled_graphs

from conftest import random_graph


# ---------------------------------------------------------------------------
# Oracles
# ---------------------------------------------------------------------------

def test_gamma_oracle_examples():
    assert gamma_oracle(path_graph(4)).value == 2
    assert gamma_oracle(complete_graph(5)).value == 1
    assert gamma_oracle(cycle_graph(6)).value == 2


def test_gamma_cer_oracle_examples():
    assert gamma_cer_oracle(path_graph(4)).value == 4
    r = gamma_cer_oracle(complete_bipartite_graph(2, 2))
    assert r.value == 2
    assert r.certificate.to_list() == [0, 1]  # one full side; crossing pairs fail
    assert gamma_cer_oracle(wheel_graph(6)).value == 1


def test_oracle_certificates_pass_their_predicates(rng):
    for _ in range(40):
        g = random_graph(rng.randrange(0, 8), 0.35, rng)
        rc = gamma_cer_oracle(g)
        rg = gamma_oracle(g)
        assert is_certified_dominating(g, rc.certificate)
        assert is_dominating(g, rg.certificate)
        assert len(rc.certificate) == rc.value
        assert len(rg.certificate) == rg.value


def test_oracle_refuses_large_graphs():
    with pytest.raises(SizeLimitError):
        gamma_oracle(empty_graph(21))
    assert gamma_oracle(empty_graph(21), max_n=21).value == 21


def test_oracle_trivial_graphs():
    assert gamma_oracle(empty_graph(0)).value == 0
    assert gamma_cer_oracle(empty_graph(0)).value == 0
    assert gamma_cer_oracle(complete_graph(1)).value == 1


# ---------------------------------------------------------------------------
# Branch and bound
# ---------------------------------------------------------------------------

def test_gamma_cer_solve_fixture_values():
    assert gamma_cer_solve(fig1_graph(2)).value == 5
    assert gamma_cer_solve(fig3a_graph(3)).value == 4
    ring = corona(cycle_graph(5), complete_graph(1))
    assert gamma_cer_solve(ring).value == 10
    assert gamma_cer_solve(empty_graph(7)).value == 7


def test_gamma_solve_examples():
    assert gamma_solve(cycle_graph(9)).value == 3
    assert gamma_solve(complete_bipartite_graph(1, 5)).value == 1
    assert gamma_solve(path_graph(7)).value == 3


def test_solver_matches_oracle_small(rng):
    for _ in range(150):
        g = random_graph(rng.randrange(0, 8), rng.random(), rng)
        assert gamma_cer_solve(g).value == gamma_cer_oracle(g).value
        assert gamma_solve(g).value == gamma_oracle(g).value


def test_certificate_is_lexicographically_smallest(rng):
    # the oracle returns the first hit in size-then-lex order, which is
    # exactly the solver's pinned tie break
    for _ in range(120):
        g = random_graph(rng.randrange(1, 8), rng.random(), rng)
        assert (
            gamma_cer_solve(g).certificate.mask
            == gamma_cer_oracle(g).certificate.mask
        )
        assert gamma_solve(g).certificate.mask == gamma_oracle(g).certificate.mask


def test_reductions_and_closed_forms_do_not_change_results(rng):
    plain = SolverConfig(use_reductions=False, use_closed_forms=False)
    for _ in range(60):
        g = random_graph(rng.randrange(0, 8), rng.random(), rng)
        a = gamma_cer_solve(g)
        b = gamma_cer_solve(g, plain)
        assert (a.value, a.certificate.mask) == (b.value, b.certificate.mask)


def test_component_additivity_and_stats():
    g = Graph.from_edges(7, [(0, 1), (1, 2), (3, 4)])  # P3 + K2 + 2 K1
    res = gamma_cer_solve(g)
    assert res.value == 1 + 2 + 1 + 1
    assert res.stats.components_split == 4
    parts = [gamma_cer_solve(c).value for _, c in __import__("certdom").components(g)]
    assert sum(parts) == res.value


def test_certificate_contains_all_supports(rng):
    from certdom import strong_supports, weak_supports

    for _ in range(80):
        g = random_graph(rng.randrange(1, 9), 0.25, rng)
        cert = gamma_cer_solve(g).certificate
        assert (weak_supports(g) | strong_supports(g)).issubset(cert)


def test_node_limit_flags_unproven():
    g = random_graph(9, 0.5, __import__("random").Random(7))
    full = gamma_cer_solve(g)
    res = gamma_cer_solve(g, SolverConfig(node_limit=1))
    assert not res.proven
    assert is_certified_dominating(g, res.certificate)
    assert res.value >= full.value
    assert len(res.certificate) == res.value


def test_solver_value_never_n_minus_1(rng):
    for _ in range(200):
        g = random_graph(rng.randrange(0, 9), rng.random(), rng)
        assert gamma_cer_solve(g).value != g.n - 1


# ---------------------------------------------------------------------------
# Minimum dominating set enumeration
# ---------------------------------------------------------------------------

def test_all_min_dominating_sets_examples():
    assert [d.to_list() for d in all_min_dominating_sets(path_graph(3))] == [[1]]
    assert [d.to_list() for d in all_min_dominating_sets(complete_graph(3))] == [
        [0], [1], [2],
    ]
    # C4: every pair dominates (pinned by enumeration at size gamma = 2)
    got = [d.to_list() for d in all_min_dominating_sets(cycle_graph(4))]
    assert got == [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]


def test_all_min_dominating_sets_lex_order(rng):
    for _ in range(30):
        g = random_graph(rng.randrange(1, 7), 0.4, rng)
        sets = [d.to_list() for d in all_min_dominating_sets(g)]
        assert sets == sorted(sets)
        assert all(is_dominating(g, d) for d in sets)


# ---------------------------------------------------------------------------
# Dominating / 2-dominating pairs
# ---------------------------------------------------------------------------

def test_find_dd2_pair_examples():
    pair = find_dd2_pair(cycle_graph(4))
    assert pair is not None and len(pair.d) == 2
    assert is_dd2_pair(cycle_graph(4), pair)
    assert find_dd2_pair(complete_graph(2)) is None


def test_find_dd2_pair_minimizes_d(rng):
    # the returned |D| matches a brute-force scan over dominating sets whose
    # complements 2-dominate
    from itertools import combinations

    from certdom import VertexSet, is_2dominating

    for _ in range(40):
        g = random_graph(rng.randrange(1, 7), 0.5, rng)
        best = None
        for k in range(g.n + 1):
            for comb in combinations(range(g.n), k):
                d = VertexSet.of(g.n, comb)
                if is_dominating(g, d) and is_2dominating(g, d.complement()):
                    best = k
                    break
            if best is not None:
                break
        pair = find_dd2_pair(g)
        if best is None:
            assert pair is None
        else:
            assert pair is not None and len(pair.d) == best
            assert is_dd2_pair(g, pair)


def test_find_dd2_pair_max_d_size():
    g = fig1_graph(3)
    assert find_dd2_pair(g, 6) is None
    pair = find_dd2_pair(g)
    assert pair is not None and len(pair.d) == 7
    assert is_dd2_pair(g, pair)


def test_find_dd2_pair_constructive_path_uses_gamma():
    # minimum degree >= 2 means no exhaustive scan is needed even at n > 20
    g = cycle_graph(30)
    pair = find_dd2_pair(g)
    assert pair is not None
    assert len(pair.d) == gamma_solve(g).value
    assert is_dd2_pair(g, pair)


def test_exhaustive_dd2_refuses_large():
    with pytest.raises(SizeLimitError):
        find_dd2_pair(path_graph(21))


def test_solver_handles_wide_bitsets():
    # multi-word masks: 130-vertex path and a 120-vertex corona
    g = path_graph(130)
    r = gamma_cer_solve(g)
    assert r.value == 44
    assert is_certified_dominating(g, r.certificate)
    ring = corona(cycle_graph(60), complete_graph(1))
    assert gamma_cer_solve(ring).value == 120
