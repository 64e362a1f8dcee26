import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from beipowers.fields import GF, QQ, DEFAULT_PRIME, SECOND_PRIME
from beipowers.graphs import Graph
from beipowers.groebner import Ideal
from beipowers.bei import binomial_edge_ideal
from beipowers.hilbert import minimalize
from beipowers.idealops import ideal_power
from beipowers.oracle import (BettiTable, betti_table, depth_monotone_initial,
                              depth_probe_generic_forms, hilbert_consistency,
                              matmul_mod, monomial_betti_fine,
                              monomial_betti_table, rank_mod_p,
                              rank_mod_p_simple, _frame_for)
from beipowers.rings import Ring, pair_ring, poly_parse

from conftest import (clique_chain, complete_graph, path_graph, star_graph,
                      taylor_betti)


def monomial_ideal(ring, exps_list):
    return Ideal(ring, [ring.monomial_poly(ring.pack(e)) for e in exps_list])


# ------------------------------------------------------------- rank core


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 18), st.integers(1, 18), st.integers(0, 4))
def test_blocked_rank_matches_simple(rows, cols, seed):
    rng = np.random.default_rng(seed * 1000 + rows * 37 + cols)
    A = rng.integers(-6, 7, size=(rows, cols))
    for p in (5, 32003):
        assert rank_mod_p(A, p, block=4) == rank_mod_p_simple(A, p)


def test_rank_known_cases():
    A = np.array([[1, 2], [2, 4]])
    assert rank_mod_p(A, 32003) == 1
    assert rank_mod_p(np.zeros((3, 4), dtype=np.int64), 7) == 0
    # rank depends on the characteristic
    B = np.array([[2, 0], [0, 1]])
    assert rank_mod_p(B, 2) == 1 and rank_mod_p(B, 3) == 2


def test_matmul_mod_chunking():
    rng = np.random.default_rng(0)
    A = rng.integers(0, 46337, size=(7, 900))
    B = rng.integers(0, 46337, size=(900, 5))
    exact = (A.astype(object) @ B.astype(object)) % 46337
    got = matmul_mod(A, B, 46337)
    assert (got == exact.astype(np.float64)).all()


# ----------------------------------------------------------- known tables


def test_principal_variable_table():
    R = Ring(("x", "y"), QQ)
    B = betti_table(Ideal(R, [R.var("x")]))
    assert B.entries == {(0, 0): 1, (1, 1): 1}
    assert (B.pd, B.depth, B.reg) == (1, 1, 0)


def test_k3_table_matches_taylor_complex():
    J = binomial_edge_ideal(complete_graph(3))
    B = betti_table(J)
    assert B.entries == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
    assert (B.pd, B.depth, B.reg) == (2, 4, 1)
    # the initial ideal's table from the independent Taylor route
    ring = J.ring
    want = taylor_betti(J.initial_gens(), ring)
    Bi = betti_table(Ideal(ring, [ring.monomial_poly(m)
                                  for m in J.initial_gens()]), field=QQ)
    assert Bi.entries == want


def test_complete_intersection_table():
    J = binomial_edge_ideal(path_graph(3))
    ring = J.ring
    ini = Ideal(ring, [ring.monomial_poly(m) for m in J.initial_gens()])
    for I in (J, ini):
        B = betti_table(I)
        assert B.entries == {(0, 0): 1, (1, 2): 2, (2, 4): 1}
        assert B.depth == 4


def test_zero_ideal_table():
    J = binomial_edge_ideal(Graph.make(3, ()))
    B = betti_table(J)
    assert B.entries == {(0, 0): 1}
    assert B.depth == 6 and B.pd == 0 and B.reg == 0


mons_small = st.lists(
    st.lists(st.integers(0, 2), min_size=3, max_size=3),
    min_size=1, max_size=4).filter(lambda ms: all(any(e) for e in ms))


@settings(max_examples=30, deadline=None)
@given(mons_small)
def test_monomial_tables_match_taylor(exps):
    ring = Ring(("u", "v", "w"), QQ)
    mons = minimalize([ring.pack(e) for e in exps], ring)
    got = dict(monomial_betti_table(mons, ring, QQ))
    got[(0, 0)] = 1
    assert got == taylor_betti(mons, ring)


@settings(max_examples=15, deadline=None)
@given(mons_small)
def test_monomial_tables_two_primes(exps):
    ring = Ring(("u", "v", "w"), QQ)
    mons = minimalize([ring.pack(e) for e in exps], ring)
    t1 = monomial_betti_table(mons, ring, GF(DEFAULT_PRIME))
    t2 = monomial_betti_table(mons, ring, GF(SECOND_PRIME))
    assert t1 == t2


def test_betti_rejects_mixed_prime_fields():
    J = binomial_edge_ideal(path_graph(3), GF(7))
    with pytest.raises(ValueError):
        betti_table(J, field=GF(11))
    B = betti_table(J, field=GF(7))
    assert B.depth == 4


def test_betti_rejects_inhomogeneous():
    R = Ring(("x", "y"), QQ)
    I = Ideal(R, [poly_parse(R, "x^2 - y")])
    with pytest.raises(ValueError):
        betti_table(I)


def test_truncation_flag():
    J = binomial_edge_ideal(complete_graph(3))
    B = betti_table(J, degree_bound=2)
    assert B.truncated and B.entries == {(0, 0): 1, (1, 2): 3}
    B_full = betti_table(J, degree_bound=10)
    assert not B_full.truncated and B_full.beta(2, 3) == 2


def test_rigidity_matches_ranks():
    for G in (complete_graph(4), clique_chain(3, 2), clique_chain(3, 3)):
        for k in (1, 2):
            Jk = ideal_power(binomial_edge_ideal(G), k)
            assert betti_table(Jk, use_rigidity=False).entries == \
                betti_table(Jk, use_rigidity=True).entries


def test_semicontinuity_on_closed_sweep():
    from beipowers.enumgraphs import connected_graphs
    for n in range(2, 5):
        for G in connected_graphs(n):
            J = binomial_edge_ideal(G)
            ring = J.ring
            B = betti_table(J, use_rigidity=False)
            Bi = betti_table(Ideal(ring, [ring.monomial_poly(m)
                                          for m in J.initial_gens()]))
            for key, v in B.entries.items():
                assert v <= Bi.entries.get(key, 0) or key == (0, 0), (G, key)


def test_koszul_stratum_dd_zero():
    J = binomial_edge_ideal(clique_chain(3, 2))
    frame = _frame_for(J, 4)
    a = (1, 2, 2, 1)
    st1 = frame.stratum(a, 2, GF(DEFAULT_PRIME))
    st2 = frame.stratum(a, 3, GF(DEFAULT_PRIME))
    assert st1.i == 2 and st1.multidegree == a and st1.degree == 6
    if st1.cols and st2.cols:
        prod = matmul_mod(st1.matrix, st2.matrix, DEFAULT_PRIME)
        assert not prod.any()


# -------------------------------------------------------------- the probe


def test_probe_examples():
    assert depth_probe_generic_forms(
        binomial_edge_ideal(complete_graph(3)), seed=1) == 4
    R3 = Ring(("x", "y", "z"), QQ)
    x = R3.var("x")
    I = Ideal(R3, [x * x, x * R3.var("y"), x * R3.var("z")])
    assert depth_probe_generic_forms(I, seed=1) == 0


def test_probe_complete_graph_powers():
    for n in (3, 4):
        J2 = ideal_power(binomial_edge_ideal(complete_graph(n)), 2)
        assert depth_probe_generic_forms(J2, seed=1) == 3


def test_probe_zero_ideal_full_depth():
    J = binomial_edge_ideal(Graph.make(2, ()))
    assert depth_probe_generic_forms(J, seed=1) == 4


def test_probe_validates_arguments():
    J = binomial_edge_ideal(path_graph(3))
    with pytest.raises(ValueError):
        depth_probe_generic_forms(J, trials=1)
    with pytest.raises(ValueError):
        depth_probe_generic_forms(J, field=QQ)


def test_probe_agrees_with_table_small_sweep():
    from beipowers.enumgraphs import connected_graphs
    for n in range(2, 5):
        for G in connected_graphs(n):
            J = binomial_edge_ideal(G)
            assert betti_table(J).depth == \
                depth_probe_generic_forms(J, seed=0), G


# ------------------------------------------------------------ consistency


def test_hilbert_consistency_examples():
    J = binomial_edge_ideal(complete_graph(3))
    B = betti_table(J)
    assert hilbert_consistency(J, B)
    # numerator 1 - 3t^2 + 2t^3 is exactly the alternating sum
    from beipowers.hilbert import hilbert_numerator
    assert hilbert_numerator(J.initial_gens(), J.ring) == [1, 0, -3, 2]
    # principal ideal of degree d: numerator 1 - t^d
    R = Ring(("x", "y"), QQ)
    f = poly_parse(R, "x^3 - x*y^2")
    I = Ideal(R, [f])
    assert hilbert_consistency(I, betti_table(I))
    # a truncated table that lost entries fails the check
    assert not hilbert_consistency(J, betti_table(J, degree_bound=2))


def test_depth_monotone_initial():
    assert depth_monotone_initial(complete_graph(4), 3)
    assert depth_monotone_initial(path_graph(4), 3)
    with pytest.raises(Exception):
        depth_monotone_initial(star_graph(4), 2)


def test_format_triangle_and_json():
    B = betti_table(binomial_edge_ideal(complete_graph(3)))
    text = B.format_triangle()
    assert "1" in text and "." in text
    data = B.to_json_dict()
    assert data["pd"] == 2 and data["table"]["1"]["2"] == 3
    assert data["field"] == DEFAULT_PRIME
