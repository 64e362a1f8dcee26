"""Closed-form invariant predictions from graph combinatorics alone.

Everything here is arithmetic on clique sizes, component counts and
induced-path lengths; no Groebner machinery is consulted (the one
exception, the persistence check, is an ideal-theoretic identity and
uses quotients of actual powers).  Cross-validation against the homology
oracle lives in the verification harness, not here.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fields import QQ
from .graphs import (CapacityError, DomainError, Graph,
                     closed_under_labeling, component_path_lengths,
                     connected_components, indecomposable_components,
                     maximal_cliques)
from . import bei
from .idealops import ideal_power, ideal_quotient_ideal


@dataclass(frozen=True)
class DepthProfile:
    """Predicted depth of S/J^k for a closed graph in the Cohen-Macaulay
    position: the profile drops by (clique size - 1) - 1 per step and
    stabilizes at r + 2c."""

    graph: Graph
    c: int                      # connected components
    r: int                      # maximal cliques
    d: tuple                    # clique dimensions, sorted descending
    values: dict = field(repr=False)   # k -> depth, for 1 <= k <= r + 1
    limit: int = 0

    def depth(self, k: int) -> int:
        if k < 1:
            raise ValueError("power must be >= 1")
        return self.values[k] if k <= self.r else self.limit

    def __post_init__(self):
        assert all(x >= 1 for x in self.d)
        assert list(self.d) == sorted(self.d, reverse=True)
        seq = [self.depth(k) for k in range(1, self.r + 2)]
        assert all(a >= b for a, b in zip(seq, seq[1:]))
        assert self.depth(self.r + 1) == self.limit


@dataclass(frozen=True)
class RegularityProfile:
    """Predicted regularity of S/J^k: sum of the longest induced path
    lengths per component, plus two per extra power."""

    graph: Graph
    lengths: tuple              # per connected component
    values: dict = field(repr=False)   # k -> regularity

    def __post_init__(self):
        ks = sorted(self.values)
        assert all(self.values[b] - self.values[a] == 2
                   for a, b in zip(ks, ks[1:]))


def depth_powers_cm_closed(G: Graph) -> DepthProfile:
    """Depth profile for a closed graph whose edge ideal is
    Cohen-Macaulay; refuses other inputs."""
    report = bei.cm_closed(G)        # raises DomainError when not closed
    if not report.cm:
        raise DomainError("edge ideal is not Cohen-Macaulay; "
                          "no depth formula applies")
    n = G.n
    c = len(connected_components(G))
    d = tuple(sorted((len(f) - 1 for f in maximal_cliques(G).cliques
                      if len(f) >= 2), reverse=True))
    r = len(d)
    limit = r + 2 * c
    values = {}
    acc = 0
    for k in range(1, r + 1):
        values[k] = n - acc + k + c - 1
        acc += d[k - 1]
    values[r + 1] = limit
    return DepthProfile(G, c, r, d, values, limit)


@dataclass(frozen=True)
class DepthLimit:
    value: int
    disconnected_caveat: bool


def depth_limit_closed(G: Graph) -> DepthLimit:
    """Stable depth of S/J^k for large k: the number of indecomposable
    components plus two per connected component.

    For connected graphs this is exactly (pieces + 2).  The disconnected
    variant carries a caveat flag: it is the value forced by the
    component-splitting of the quotient ring, reported rather than
    asserted.
    """
    if not closed_under_labeling(G):
        raise DomainError("graph is not closed under the given labeling")
    r_ind, _ = indecomposable_components(G)
    c = len(connected_components(G))
    return DepthLimit(r_ind + 2 * c, c > 1)


def reg_powers_closed(G: Graph, k: int) -> int:
    """Predicted regularity of S/J^k for a closed graph.

    An edgeless graph has the zero ideal: the regularity is 0 for every
    k, short-circuiting the formula (whose +2 steps assume a nonzero
    ideal).
    """
    if k < 1:
        raise ValueError("power must be >= 1")
    if not closed_under_labeling(G):
        raise DomainError("graph is not closed under the given labeling")
    if not G.edges:
        return 0
    return sum(component_path_lengths(G)) + 2 * (k - 1)


def reg_profile(G: Graph, k_max: int) -> RegularityProfile:
    lengths = component_path_lengths(G)
    values = {k: reg_powers_closed(G, k) for k in range(1, k_max + 1)}
    return RegularityProfile(G, lengths, values)


def persistence_check(G: Graph, k: int, field=QQ, *,
                      n_max: int = 6, k_max: int = 3) -> bool:
    """Whether (J^(k+1) : J) = J^k, by canonical basis equality."""
    if G.n > n_max or k > k_max:
        raise CapacityError(
            f"persistence budget exceeded (n={G.n}>{n_max} or k={k}>{k_max})")
    J = bei.binomial_edge_ideal(G, field)
    if J.is_zero():
        return True
    hi = ideal_power(J, k + 1)
    return ideal_quotient_ideal(hi, J).equals(ideal_power(J, k))
