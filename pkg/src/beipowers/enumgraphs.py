"""Exhaustive generation of small graphs up to isomorphism.

The canonical form of a graph is the lexicographically smallest
row-by-row adjacency bitstring over all vertex orderings, found by a
pruned backtracking search; no external canonical-labeling dependency.
Graphs on n vertices are produced by attaching a new vertex to every
representative on n-1 vertices in every possible way and deduplicating
by canonical form, which reaches every isomorphism class.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .graphs import Graph


def _canonical_rows(G: Graph) -> tuple:
    """Minimal tuple of adjacency rows (row k = bits towards earlier
    positions) over all orderings of the vertices."""
    n = G.n
    adj = G.adj
    verts = list(range(1, n + 1))
    best: list | None = None

    def rec(placed: list, rows: list):
        nonlocal best
        k = len(placed)
        if k == n:
            if best is None or rows < best:
                best = list(rows)
            return
        options = []
        for v in verts:
            if v in placed:
                continue
            row = 0
            for i, u in enumerate(placed):
                if adj[v] >> u & 1:
                    row |= 1 << i
            options.append((row, v))
        options.sort()
        for row, v in options:
            if best is not None:
                prefix = rows + [row]
                if prefix > best[:k + 1]:
                    break       # options are sorted; the rest only grow
            placed.append(v)
            rows.append(row)
            rec(placed, rows)
            placed.pop()
            rows.pop()

    rec([], [])
    assert best is not None
    return tuple(best)


def canonical_key(G: Graph) -> tuple:
    return (G.n, _canonical_rows(G))


def canonical_graph(G: Graph) -> Graph:
    """The canonically labeled representative of G's isomorphism class."""
    rows = _canonical_rows(G)
    edges = []
    for k, row in enumerate(rows):
        for i in range(k):
            if row >> i & 1:
                edges.append((i + 1, k + 1))
    return Graph.make(G.n, edges)


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple:
    """Canonical representatives of all graphs on n vertices."""
    if n == 1:
        return (Graph.make(1, ()),)
    out = {}
    for G in all_graphs(n - 1):
        base_edges = list(G.edges)
        for size in range(0, n):
            for nbhd in combinations(range(1, n), size):
                H = Graph.make(n, base_edges + [(v, n) for v in nbhd])
                key = canonical_key(H)
                if key not in out:
                    out[key] = canonical_graph(H)
    return tuple(sorted(out.values(), key=lambda g: (len(g.edges), g.edges)))


def connected_graphs(n: int) -> tuple:
    """Canonical representatives of the connected graphs on n vertices."""
    from .graphs import is_connected
    return tuple(g for g in all_graphs(n) if is_connected(g))
