"""Shared graph builders and independent reference implementations.

The reference implementations here deliberately avoid the package's own
code paths (bitsets, lcm lattices, packed monomials) so that agreement
tests compare genuinely different routes to the same numbers.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product

import pytest

from beipowers.graphs import Graph, NET_EDGES, TENT_EDGES, CLAW_EDGES


# ------------------------------------------------------- graph builders


def path_graph(n):
    return Graph.make(n, [(i, i + 1) for i in range(1, n)])


def complete_graph(n):
    return Graph.make(n, list(combinations(range(1, n + 1), 2)))


def cycle_graph(n):
    return Graph.make(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def star_graph(n):
    return Graph.make(n, [(1, i) for i in range(2, n + 1)])


def clique_chain(*sizes):
    """Consecutive cliques overlapping in a single vertex (closed, CM)."""
    edges = []
    start = 1
    for s in sizes:
        edges += list(combinations(range(start, start + s), 2))
        start += s - 1
    return Graph.make(start, edges)


@pytest.fixture
def net():
    return Graph.make(6, NET_EDGES)


@pytest.fixture
def tent():
    return Graph.make(6, TENT_EDGES)


@pytest.fixture
def claw():
    return Graph.make(4, CLAW_EDGES)


# ------------------------------------------- independent reference code


def naive_components(n, edges):
    """Connected components via dict adjacency and set growth."""
    adj = {v: set() for v in range(1, n + 1)}
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    left = set(range(1, n + 1))
    parts = []
    while left:
        v = min(left)
        comp = {v}
        frontier = {v}
        while frontier:
            frontier = set().union(*(adj[u] for u in frontier)) - comp
            comp |= frontier
        parts.append(tuple(sorted(comp)))
        left -= comp
    return tuple(sorted(parts))


def naive_cut_point_sets(G: Graph):
    """All W (empty included) where restoring any member drops the
    component count; straight from the definition, dict-based."""

    def comp_count2(removed):
        keep = [v for v in range(1, G.n + 1) if v not in removed]
        adj = {v: set() for v in keep}
        for i, j in G.edges:
            if i in adj and j in adj:
                adj[i].add(j)
                adj[j].add(i)
        left = set(keep)
        count = 0
        while left:
            v = left.pop()
            comp = {v}
            frontier = {v}
            while frontier:
                frontier = set().union(*(adj[u] for u in frontier)) - comp
                comp |= frontier
            left -= comp
            count += 1
        return count

    out = []
    for size in range(0, G.n):
        for W in combinations(range(1, G.n + 1), size):
            WS = set(W)
            c = comp_count2(WS)
            if all(comp_count2(WS - {i}) < c for i in W):
                out.append(W)
    return sorted(out)


def naive_induced_embedding(G: Graph, pattern_edges, pattern_n):
    """Find an induced copy of the pattern by brute force over ordered
    vertex tuples."""
    eset = set(pattern_edges)
    for verts in permutations(range(1, G.n + 1), pattern_n):
        ok = True
        for a in range(1, pattern_n + 1):
            for b in range(a + 1, pattern_n + 1):
                want = (a, b) in eset
                if G.adjacent(verts[a - 1], verts[b - 1]) != want:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return verts
    return None


def naive_has_long_induced_cycle(G: Graph):
    """Brute force: any induced cycle on >= 4 vertices?"""
    for size in range(4, G.n + 1):
        for verts in combinations(range(1, G.n + 1), size):
            for order in permutations(verts[1:]):
                cyc = (verts[0],) + order
                good = True
                for a in range(size):
                    for b in range(a + 1, size):
                        adjacent = G.adjacent(cyc[a], cyc[b])
                        consecutive = (b == a + 1) or (a == 0 and b == size - 1)
                        if adjacent != consecutive:
                            good = False
                            break
                    if not good:
                        break
                if good:
                    return True
    return False


def decode_graph6_reference(s: str) -> Graph:
    """Second graph6 decoder, written against the format description
    rather than sharing code with the package parser."""
    data = [ord(ch) - 63 for ch in s.strip()]
    n = data[0]
    bits = "".join(format(v, "06b") for v in data[1:])
    edges = []
    pos = 0
    for col in range(2, n + 1):
        for row in range(1, col):
            if bits[pos] == "1":
                edges.append((row, col))
            pos += 1
    return Graph.make(n, edges)


# --------------------------------------------------- small linear algebra


def fraction_rank(rows):
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat or not mat[0]:
        return 0
    rank = 0
    ncols = len(mat[0])
    for c in range(ncols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pr = [x / mat[rank][c] for x in mat[rank]]
        mat[rank] = pr
        for i in range(rank + 1, len(mat)):
            f = mat[i][c]
            if f:
                mat[i] = [a - f * b for a, b in zip(mat[i], pr)]
        rank += 1
    return rank


def taylor_betti(mons, ring):
    """Graded Betti numbers of S/(mons) from the Taylor complex, over the
    rationals.  Exponential in the number of generators; tiny inputs only.

    Returns {(i, j): beta} including (0, 0): 1.
    """
    mons = list(mons)
    r = len(mons)
    assert r <= 14
    lcm_of = {}
    for k in range(r + 1):
        for U in combinations(range(r), k):
            m = 0
            for u in U:
                m = ring.lcm(m, mons[u])
            lcm_of[U] = m
    # boundary matrices of the Taylor complex tensored with the residue
    # field: entry +-1 exactly when dropping a generator keeps the lcm
    ranks = {}
    bases = {k: sorted(U for U in lcm_of if len(U) == k) for k in range(r + 1)}
    for k in range(1, r + 1):
        rows = {U: idx for idx, U in enumerate(bases[k - 1])}
        mat = [[0] * len(bases[k]) for _ in rows] if rows else []
        for cidx, U in enumerate(bases[k]):
            for pos in range(k):
                V = U[:pos] + U[pos + 1:]
                if lcm_of[V] == lcm_of[U]:
                    mat[rows[V]][cidx] = 1 if pos % 2 == 0 else -1
        # split by internal degree: entries only connect equal lcm degree
        for j in sorted({ring.deg(lcm_of[U]) for U in bases[k]}):
            cols = [c for c, U in enumerate(bases[k])
                    if ring.deg(lcm_of[U]) == j]
            rws = [rows[V] for V in bases[k - 1] if ring.deg(lcm_of[V]) == j]
            sub = [[mat[rr][cc] for cc in cols] for rr in rws]
            ranks[(k, j)] = fraction_rank(sub)
    out = {(0, 0): 1}
    for k in range(1, r + 1):
        degs = {}
        for U in bases[k]:
            j = ring.deg(lcm_of[U])
            degs[j] = degs.get(j, 0) + 1
        for j, count in degs.items():
            beta = count - ranks.get((k, j), 0) - ranks.get((k + 1, j), 0)
            if beta:
                out[(k, j)] = beta
    return out


def brute_hilbert_function(mons, ring, d):
    """Count monomials of degree d outside the monomial ideal, by direct
    enumeration over exponent vectors."""
    nv = ring.nvars
    count = 0
    for exps in _compositions(d, nv):
        m = ring.pack(exps)
        if not any(ring.divides(g, m) for g in mons):
            count += 1
    return count


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
