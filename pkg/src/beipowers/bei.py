"""Binomial edge ideals and their prime/symbolic structure.

For a graph G on 1..n, the edge ideal lives in K[x1..xn, y1..yn] and is
generated by the two-by-two minors x_i*y_j - x_j*y_i over the edges.
The minimal primes are indexed by the cut-point sets W: each is generated
by the variables of W together with the minors of the completed
components of G minus W.  Symbolic powers are computed through that
decomposition (the k-th symbolic power is the intersection of the k-th
powers of the minimal primes, each of which equals its own symbolic
power), which is the only route implemented here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .fields import QQ
from .graphs import (CapacityError, CutSet, DomainError, Graph,
                     NET_EDGES, closed_under_labeling, connected_components,
                     cut_point_sets, forbidden_subgraph_scan,
                     is_induced_embedding, maximal_cliques)
from .groebner import Ideal
from .idealops import ideal_power, intersect_many
from .rings import Poly, Ring, pair_ring


def edge_binomial(ring: Ring, n: int, i: int, j: int) -> Poly:
    """x_i*y_j - x_j*y_i for i < j."""
    if not 1 <= i < j <= n:
        raise ValueError(f"bad edge ({i},{j})")
    xi, xj = ring.var_mon(i - 1), ring.var_mon(j - 1)
    yi, yj = ring.var_mon(n + i - 1), ring.var_mon(n + j - 1)
    return ring.poly({xi + yj: 1, xj + yi: -1})


def binomial_edge_ideal(G: Graph, field=QQ) -> Ideal:
    """Generators in sorted edge order; the zero ideal for no edges."""
    ring = pair_ring(G.n, field)
    return Ideal(ring, [edge_binomial(ring, G.n, i, j) for (i, j) in G.edges])


@dataclass(frozen=True)
class PrimeComponent:
    """A minimal prime: the variables of the cut set plus the minors of
    each completed component; height n - c(W) + |W|."""

    cutset: CutSet
    ideal: Ideal
    height: int


def prime_component_ideal(G: Graph, cutset: CutSet, field=QQ) -> Ideal:
    ring = pair_ring(G.n, field)
    gens = []
    for v in cutset.W:
        gens.append(ring.monomial_poly(ring.var_mon(v - 1)))
        gens.append(ring.monomial_poly(ring.var_mon(G.n + v - 1)))
    for comp in cutset.components:
        for i, j in combinations(comp, 2):
            gens.append(edge_binomial(ring, G.n, i, j))
    return Ideal(ring, gens)


def minimal_primes(G: Graph, field=QQ) -> tuple:
    """One prime component per cut-point set."""
    out = []
    for cs in cut_point_sets(G):
        ideal = prime_component_ideal(G, cs, field)
        out.append(PrimeComponent(cs, ideal, G.n - cs.c + len(cs.W)))
    return tuple(out)


def unmixed(G: Graph) -> bool:
    """True iff n + c(W) - |W| is the same for every cut-point set."""
    sets = cut_point_sets(G)
    base = next(cs.c for cs in sets if not cs.W)
    return all(cs.c - len(cs.W) == base for cs in sets)


def dimension_quotient(G: Graph) -> int:
    """max over cut-point sets of n + c(W) - |W| (the Krull dimension)."""
    return max(G.n + cs.c - len(cs.W) for cs in cut_point_sets(G))


# ------------------------------------------------- Cohen-Macaulay position


@dataclass(frozen=True)
class CmClosedReport:
    unmixed: bool
    cm: bool
    interval_form: tuple | None    # per component: (a_1 < ... < a_{r+1})


def cm_closed(G: Graph) -> CmClosedReport:
    """Cohen-Macaulay test for a graph closed under its given labeling:
    the maximal cliques of every component must tile its label interval,
    consecutive cliques overlapping in exactly one vertex."""
    if not closed_under_labeling(G):
        raise DomainError("graph is not closed under the given labeling")
    cliques = maximal_cliques(G).cliques
    intervals = []
    cm = True
    for comp in connected_components(G):
        facets = sorted(c for c in cliques if set(c) <= set(comp))
        if len(comp) == 1:
            intervals.append((comp[0],))
            continue
        # in a closed labeling every maximal clique is a label interval
        endpoints = [comp[0]]
        good = True
        for f in facets:
            lo, hi = f[0], f[-1]
            if tuple(range(lo, hi + 1)) != f:
                good = False
                break
            if lo != endpoints[-1]:
                good = False
                break
            endpoints.append(hi)
        good = good and endpoints[-1] == comp[-1]
        if good:
            intervals.append(tuple(endpoints))
        else:
            cm = False
    report_unmixed = unmixed(G)
    return CmClosedReport(report_unmixed, cm, tuple(intervals) if cm else None)


# ------------------------------------------------------- symbolic powers

_prime_power_cache: dict = {}


def _prime_power(G: Graph, cs: CutSet, k: int, field) -> Ideal:
    key = (G.n, G.edges, field, cs.W, k)
    ideal = _prime_power_cache.get(key)
    if ideal is None:
        ideal = ideal_power(prime_component_ideal(G, cs, field), k)
        _prime_power_cache[key] = ideal
    return ideal


def symbolic_power_membership(f: Poly, G: Graph, k: int) -> bool:
    """Whether f lies in the k-th symbolic power, i.e. in the k-th power
    of every minimal prime."""
    if k < 1:
        raise ValueError("power must be >= 1")
    field = f.ring.field
    for cs in cut_point_sets(G):
        if not _prime_power(G, cs, k, field).contains(f):
            return False
    return True


def symbolic_power(G: Graph, k: int, field=QQ) -> Ideal:
    """The k-th symbolic power as an intersection of prime powers."""
    parts = [_prime_power(G, cs, k, field) for cs in cut_point_sets(G)]
    return intersect_many(parts)


def symbolic_equals_ordinary(G: Graph, k: int, field=QQ, *,
                             n_max: int = 6, k_max: int = 2) -> bool:
    """Decide J^k = J^(k) by canonical basis equality.

    The intersection over all minimal primes is desk-scale work; the
    default budget admits graphs with at most six vertices and k <= 2.
    """
    if G.n > n_max or k > k_max:
        raise CapacityError(
            f"symbolic power budget exceeded (n={G.n}>{n_max} or k={k}>{k_max})")
    J = binomial_edge_ideal(G, field)
    if J.is_zero():
        return True
    return symbolic_power(G, k, field).equals(ideal_power(J, k))


# ----------------------------------------------------------- net witness

#: The certificate polynomial for the net pattern on vertices 1..6, in
#: terms of pattern labels; it lies in the second symbolic power but not
#: the second ordinary power.
_NET_WITNESS_TERMS = (
    (+1, (3, 5, 6), (1, 2, 4)),
    (-1, (1, 5, 6), (2, 3, 4)),
    (-1, (3, 4, 5), (1, 2, 6)),
    (+1, (1, 2, 5), (3, 4, 6)),
    (+1, (1, 3, 4), (2, 5, 6)),
    (-1, (1, 2, 3), (4, 5, 6)),
)


class WitnessError(AssertionError):
    """A transported witness failed its membership checks."""


def net_witness_polynomial(ring: Ring, n: int, embedding=None) -> Poly:
    """The witness transported along an embedding of the net pattern
    (identity embedding when omitted)."""
    emb = embedding or tuple(range(1, 7))
    terms = {}
    for sign, xs, ys in _NET_WITNESS_TERMS:
        m = 0
        for a in xs:
            m += ring.var_mon(emb[a - 1] - 1)
        for b in ys:
            m += ring.var_mon(n + emb[b - 1] - 1)
        terms[m] = sign
    return ring.poly(terms)


def net_witness_family(G: Graph, embedding, k: int, field=QQ, *,
                       check: bool = True) -> Poly:
    """The degree-6 witness times the (k-2)-nd power of the minor of the
    embedded edge {2,3}; certifies that the k-th symbolic and ordinary
    powers differ.

    With ``check`` set the two memberships (inside the symbolic power,
    outside the ordinary power) are recomputed; a failure raises
    :class:`WitnessError`.
    """
    if k < 2:
        raise ValueError("witness family starts at k = 2")
    emb = tuple(embedding)
    if not is_induced_embedding(G, NET_EDGES, 6, emb):
        raise DomainError("embedding is not an induced net")
    ring = pair_ring(G.n, field)
    g = net_witness_polynomial(ring, G.n, emb)
    a, b = sorted((emb[1], emb[2]))
    minor = edge_binomial(ring, G.n, a, b)
    out = g
    for _ in range(k - 2):
        out = out * minor
    if check:
        if not symbolic_power_membership(out, G, k):
            raise WitnessError("witness escaped a symbolic power component")
        J = binomial_edge_ideal(G, field)
        if ideal_power(J, k).contains(out):
            raise WitnessError("witness unexpectedly inside the ordinary power")
    return out


# ------------------------------------------------- bipartite initial graph


@dataclass(frozen=True)
class BipartiteInitialGraph:
    """The bipartite graph H on {x_i} and {y_j} whose monomial edge ideal
    is the initial ideal of the edge ideal of a closed-labeled graph."""

    n: int
    edges: tuple     # pairs (i, j), i < j: an edge {x_i, y_j}

    def x_isolated(self) -> tuple:
        used = {i for i, _ in self.edges}
        return tuple(i for i in range(1, self.n + 1) if i not in used)

    def y_isolated(self) -> tuple:
        used = {j for _, j in self.edges}
        return tuple(j for j in range(1, self.n + 1) if j not in used)


def initial_bipartite_graph(G: Graph) -> BipartiteInitialGraph:
    if not closed_under_labeling(G):
        raise DomainError("graph is not closed under the given labeling")
    return BipartiteInitialGraph(G.n, tuple(G.edges))


def induced_matching_number(H: BipartiteInitialGraph, *,
                            max_edges: int = 24) -> int:
    """Largest induced matching of H, by exhaustive branch and bound."""
    m = len(H.edges)
    if m > max_edges:
        raise CapacityError(f"induced matching search capped at {max_edges} edges")
    if m == 0:
        return 0
    # conflict[e]: edges sharing an endpoint with e, or joined to it by an
    # edge of H (x_a--y_d or x_c--y_b for e = x_a--y_b, other = x_c--y_d)
    edge_set = set(H.edges)
    conflict = [0] * m
    for a in range(m):
        ia, ja = H.edges[a]
        for b in range(m):
            if a == b:
                continue
            ib, jb = H.edges[b]
            if ia == ib or ja == jb or (ia, jb) in edge_set or \
               (ib, ja) in edge_set:
                conflict[a] |= 1 << b
    best = 0

    def grow(idx: int, chosen: int, banned: int):
        nonlocal best
        size = bin(chosen).count("1")
        if size + (m - idx) <= best:
            return
        if idx == m:
            best = max(best, size)
            return
        if not (banned >> idx) & 1:
            grow(idx + 1, chosen | (1 << idx), banned | conflict[idx])
        grow(idx + 1, chosen, banned)

    grow(0, 0, 0)
    return best
