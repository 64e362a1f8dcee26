import pytest

from beipowers.fields import GF, QQ
from beipowers.graphs import (DomainError, Graph, forbidden_subgraph_scan,
                              recognize_closed, relabel_graph)
from beipowers.groebner import Ideal
from beipowers.bei import (BipartiteInitialGraph, binomial_edge_ideal,
                           cm_closed, dimension_quotient, edge_binomial,
                           induced_matching_number, initial_bipartite_graph,
                           minimal_primes, net_witness_family,
                           net_witness_polynomial, symbolic_equals_ordinary,
                           symbolic_power, symbolic_power_membership, unmixed,
                           WitnessError)
from beipowers.hilbert import krull_dimension, minimalize, monomial_intersection
from beipowers.idealops import ideal_power, intersect_many
from beipowers.rings import pair_ring, poly_parse, poly_str
from beipowers.enumgraphs import connected_graphs
from beipowers.graphs import CapacityError

from conftest import clique_chain, complete_graph, path_graph, star_graph


def test_generators_p3():
    J = binomial_edge_ideal(path_graph(3))
    assert [poly_str(g) for g in J.gens] == \
        ["x1*y2 - x2*y1", "x2*y3 - x3*y2"]


def test_generators_k2_and_edgeless():
    assert [poly_str(g) for g in binomial_edge_ideal(
        Graph.make(2, [(1, 2)])).gens] == ["x1*y2 - x2*y1"]
    assert binomial_edge_ideal(Graph.make(4, ())).is_zero()


def test_minimal_primes_k3():
    comps = minimal_primes(complete_graph(3))
    assert len(comps) == 1
    pc = comps[0]
    assert pc.cutset.W == () and pc.height == 2
    assert len(pc.ideal.gens) == 3


def test_minimal_primes_p3():
    comps = {pc.cutset.W: pc for pc in minimal_primes(path_graph(3))}
    assert set(comps) == {(), (2,)}
    assert comps[()].height == 2
    assert len(comps[()].ideal.gens) == 3        # completed triangle
    assert comps[(2,)].height == 2
    assert sorted(poly_str(g) for g in comps[(2,)].ideal.gens) == ["x2", "y2"]


def test_minimal_primes_net(net):
    comps = minimal_primes(net)
    assert len(comps) == 7
    for pc in comps:
        assert pc.height == 6 - pc.cutset.c + len(pc.cutset.W)


def test_intersection_of_primes_is_radical_ideal():
    # the decomposition must recover the edge ideal itself
    for n in range(2, 5):
        for G in connected_graphs(n):
            J = binomial_edge_ideal(G)
            parts = [pc.ideal for pc in minimal_primes(G)]
            assert intersect_many(parts).equals(J), G


def test_initial_ideal_matches_prime_initials():
    # the initial ideal is the intersection of the initial ideals of the
    # minimal primes, as monomial ideals
    for n in range(2, 6):
        for G in connected_graphs(n):
            J = binomial_edge_ideal(G)
            ring = J.ring
            acc = None
            for pc in minimal_primes(G):
                mons = minimalize(pc.ideal.initial_gens(), ring)
                acc = mons if acc is None else \
                    monomial_intersection(acc, mons, ring)
            assert tuple(sorted(acc)) == \
                tuple(sorted(minimalize(J.initial_gens(), ring))), G


def test_unmixed_examples(net, claw):
    assert unmixed(complete_graph(5))
    assert not unmixed(claw)
    assert unmixed(net)


def test_dimension_formula_examples(net, claw):
    assert dimension_quotient(complete_graph(4)) == 5
    assert dimension_quotient(path_graph(3)) == 4
    assert dimension_quotient(claw) == 6       # W = {center} gives 4+3-1
    assert dimension_quotient(net) == krull_dimension(binomial_edge_ideal(net))


def test_cm_closed_examples():
    rep = cm_closed(path_graph(4))
    assert rep.cm and rep.unmixed and rep.interval_form == ((1, 2, 3, 4),)
    rep = cm_closed(complete_graph(5))
    assert rep.cm and rep.interval_form == ((1, 5),)
    # overlapping facets [1,3], [2,4]: closed but not unmixed, not CM
    diamond = Graph.make(4, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])
    rep = cm_closed(diamond)
    assert not rep.cm and not rep.unmixed and rep.interval_form is None


def test_cm_closed_rejects_nonclosed(claw):
    with pytest.raises(DomainError):
        cm_closed(claw)


def test_cm_closed_agrees_with_unmixed_sweep():
    for n in range(1, 7):
        for G in connected_graphs(n):
            sigma = recognize_closed(G)
            if sigma is None:
                continue
            rep = cm_closed(relabel_graph(G, sigma))
            assert rep.cm == rep.unmixed == unmixed(G), G


def test_witness_memberships_on_net(net):
    ring = pair_ring(6)
    g = net_witness_polynomial(ring, 6)
    expected = poly_parse(ring, "x3*x5*x6*y1*y2*y4 - x1*x5*x6*y2*y3*y4"
                          " - x3*x4*x5*y1*y2*y6 + x1*x2*x5*y3*y4*y6"
                          " + x1*x3*x4*y2*y5*y6 - x1*x2*x3*y4*y5*y6")
    assert g == expected
    assert symbolic_power_membership(g, net, 2)
    J2 = ideal_power(binomial_edge_ideal(net), 2)
    assert not J2.contains(g)


def test_witness_generator_membership(net):
    J = binomial_edge_ideal(net)
    assert symbolic_power_membership(J.gens[0], net, 1)


def test_net_witness_family_identity(net):
    w2 = net_witness_family(net, (1, 2, 3, 4, 5, 6), 2)
    g = net_witness_polynomial(pair_ring(6), 6)
    assert w2 == g
    w3 = net_witness_family(net, (1, 2, 3, 4, 5, 6), 3)
    f23 = edge_binomial(pair_ring(6), 6, 2, 3)
    assert w3 == g * f23


def test_net_witness_family_transported():
    G7 = Graph.make(7, [(1, 2), (2, 3), (2, 5), (3, 4), (3, 5), (5, 6), (1, 7)])
    emb = forbidden_subgraph_scan(G7).net
    assert emb is not None
    net_witness_family(G7, emb, 2)     # membership checks run inside


def test_net_witness_family_rejects_bad_embedding(net):
    with pytest.raises(DomainError):
        net_witness_family(net, (1, 2, 3, 4, 6, 5), 2)
    with pytest.raises(ValueError):
        net_witness_family(net, (1, 2, 3, 4, 5, 6), 1)


def test_symbolic_equals_ordinary_small():
    assert symbolic_equals_ordinary(Graph.make(2, [(1, 2)]), 2)
    assert symbolic_equals_ordinary(path_graph(3), 2)
    assert symbolic_equals_ordinary(complete_graph(3), 2)


def test_symbolic_differs_on_net(net):
    assert symbolic_equals_ordinary(net, 2) is False


def test_symbolic_budget(net):
    with pytest.raises(CapacityError):
        symbolic_equals_ordinary(net, 3)
    with pytest.raises(CapacityError):
        symbolic_equals_ordinary(Graph.make(7, [(1, 2)] + [(i, i + 1)
                                 for i in range(2, 7)]), 2)


def test_symbolic_power_contains_ordinary(net):
    sym = symbolic_power(net, 2)
    J2 = ideal_power(binomial_edge_ideal(net), 2)
    for g in J2.gens:
        assert sym.contains(g)


def test_initial_bipartite_graph():
    H = initial_bipartite_graph(path_graph(3))
    assert H.edges == ((1, 2), (2, 3))
    K3 = initial_bipartite_graph(complete_graph(3))
    assert K3.edges == ((1, 2), (1, 3), (2, 3))
    # y_1 and x_n isolated for connected closed-labeled graphs
    for G in (path_graph(4), complete_graph(4), clique_chain(3, 2)):
        H = initial_bipartite_graph(G)
        assert G.n in H.x_isolated()
        assert 1 in H.y_isolated()


def test_initial_bipartite_rejects_nonclosed(claw):
    with pytest.raises(DomainError):
        initial_bipartite_graph(claw)


def test_induced_matching_examples():
    assert induced_matching_number(initial_bipartite_graph(
        complete_graph(4))) == 1
    assert induced_matching_number(initial_bipartite_graph(
        path_graph(4))) == 3
    assert induced_matching_number(
        BipartiteInitialGraph(2, ((1, 2),))) == 1
    with pytest.raises(CapacityError):
        induced_matching_number(BipartiteInitialGraph(
            30, tuple((i, i + 1) for i in range(1, 27))))


def test_induced_matching_equals_path_length_sweep():
    from beipowers.graphs import component_path_lengths
    for n in range(2, 7):
        for G in connected_graphs(n):
            sigma = recognize_closed(G)
            if sigma is None:
                continue
            relabeled = relabel_graph(G, sigma)
            H = initial_bipartite_graph(relabeled)
            assert induced_matching_number(H) == \
                sum(component_path_lengths(relabeled)), G
