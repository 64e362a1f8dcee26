"""Simple graphs on labeled vertices 1..n, with the classifications and
combinatorial quantities the invariant formulas consume.

Adjacency is kept as fixed-width bitsets (one int per vertex, bit u set
iff u is a neighbor), so subset tests in the hot scans are single integer
operations.  All operations are pure functions of an immutable graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations


class GraphParseError(ValueError):
    pass


class DomainError(ValueError):
    """An operation was applied outside its stated hypotheses."""


class CapacityError(RuntimeError):
    """A desk-scale search bound was exceeded."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 1..n."""

    n: int
    edges: tuple     # sorted tuple of (i, j) with i < j

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one vertex")
        seen = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop edge {i}")
            if not (1 <= i < j <= self.n):
                raise ValueError(f"edge {e} out of range")
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        if list(self.edges) != sorted(self.edges):
            raise ValueError("edges must be sorted")

    @staticmethod
    def make(n: int, edges) -> "Graph":
        canon = tuple(sorted((min(i, j), max(i, j)) for (i, j) in set(
            (min(i, j), max(i, j)) for (i, j) in edges)))
        return Graph(n, canon)

    @cached_property
    def adj(self) -> tuple:
        """Bitset adjacency rows, index 0 unused."""
        rows = [0] * (self.n + 1)
        for i, j in self.edges:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return tuple(rows)

    @cached_property
    def vertex_mask(self) -> int:
        return ((1 << (self.n + 1)) - 1) & ~1

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def __str__(self):
        return serialize_edge_list(self)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------- parsing


def parse_graph(text: str) -> Graph:
    """Parse an edge list ("i j" lines, '#' comments) or a graph6 record."""
    stripped = text.strip()
    if not stripped:
        raise GraphParseError("empty input")
    first = stripped.splitlines()[0].split("#")[0].strip()
    if first and not all(tok.lstrip("-").isdigit() for tok in first.split()):
        return parse_graph6(stripped)
    return parse_edge_list(text)


def parse_edge_list(text: str) -> Graph:
    edges = []
    n = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#")[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) != 2:
            raise GraphParseError(f"line {lineno}: malformed line {line!r}")
        pair = []
        for tok in toks:
            try:
                v = int(tok)
            except ValueError:
                raise GraphParseError(f"line {lineno}: malformed token {tok!r}")
            if v <= 0:
                raise GraphParseError(f"line {lineno}: vertex index {tok!r} "
                                      "must be positive")
            pair.append(v)
        i, j = pair
        if i == j:
            raise GraphParseError(f"line {lineno}: loop edge {i}")
        edges.append((min(i, j), max(i, j)))
        n = max(n, i, j)
    if not edges:
        raise GraphParseError("no edges found")
    return Graph.make(n, edges)


def serialize_edge_list(G: Graph) -> str:
    return "\n".join(f"{i} {j}" for i, j in G.edges)


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 record with order at most 62."""
    s = text.strip()
    if not s:
        raise GraphParseError("empty graph6 record")
    vals = []
    for ch in s:
        o = ord(ch)
        if not 63 <= o <= 126:
            raise GraphParseError(f"bad graph6 byte {ch!r}")
        vals.append(o - 63)
    n = vals[0]
    if n == 63:
        raise GraphParseError("graph6 orders above 62 are not supported")
    if n == 0:
        raise GraphParseError("graph6 record with zero vertices")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(vals) - 1 != need:
        raise GraphParseError(f"graph6 record length mismatch for n={n}")
    bits = []
    for v in vals[1:]:
        for k in range(5, -1, -1):
            bits.append((v >> k) & 1)
    edges = []
    idx = 0
    for j in range(2, n + 1):
        for i in range(1, j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph.make(n, edges)


def to_graph6(G: Graph) -> str:
    if G.n > 62:
        raise CapacityError("graph6 orders above 62 are not supported")
    bits = []
    for j in range(2, G.n + 1):
        for i in range(1, j):
            bits.append(1 if G.adjacent(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(G.n + 63)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


# ------------------------------------------------------------ components


def _components_masked(G: Graph, mask: int) -> list:
    """Connected components (as bitmasks) of the induced subgraph."""
    comps = []
    rest = mask
    adj = G.adj
    while rest:
        start = rest & -rest
        comp = start
        frontier = start
        while frontier:
            grow = 0
            for v in _bits(frontier):
                grow |= adj[v] & mask
            frontier = grow & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def connected_components(G: Graph) -> tuple:
    """Partition of 1..n into connected components, each sorted."""
    comps = _components_masked(G, G.vertex_mask)
    parts = sorted(tuple(sorted(_bits(c))) for c in comps)
    return tuple(parts)


def is_connected(G: Graph) -> bool:
    return len(_components_masked(G, G.vertex_mask)) == 1


def induced_subgraph(G: Graph, vertices) -> tuple:
    """(subgraph relabeled 1..k, original labels in new order)."""
    verts = tuple(sorted(vertices))
    pos = {v: i + 1 for i, v in enumerate(verts)}
    edges = [(pos[i], pos[j]) for (i, j) in G.edges if i in pos and j in pos]
    return Graph.make(len(verts), edges), verts


def relabel_graph(G: Graph, sigma) -> Graph:
    """Apply the relabeling sigma (sigma[v] = new label of v)."""
    return Graph.make(G.n, [(sigma[i], sigma[j]) for (i, j) in G.edges])


# ------------------------------------------------------------- chordality


def lexbfs(G: Graph, tie_priority=None) -> tuple:
    """Lexicographic BFS order; ties go to the vertex latest in
    ``tie_priority`` (or the smallest label when none is given)."""
    n = G.n
    labels = {v: [] for v in range(1, n + 1)}
    if tie_priority is None:
        rank = {v: -v for v in range(1, n + 1)}
    else:
        rank = {v: i for i, v in enumerate(tie_priority)}
    order = []
    remaining = set(range(1, n + 1))
    for step in range(n, 0, -1):
        best = max(remaining, key=lambda v: (labels[v], rank[v]))
        order.append(best)
        remaining.discard(best)
        for u in _bits(G.adj[best]):
            if u in remaining:
                labels[u].append(step)
    return tuple(order)


def _peo_check(G: Graph, order) -> tuple:
    """Verify a perfect elimination order; return (ok, failing triple)."""
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in _bits(G.adj[v]) if pos[u] > pos[v]]
        if len(later) < 2:
            continue
        parent = min(later, key=lambda u: pos[u])
        for w in later:
            if w != parent and not G.adjacent(parent, w):
                return False, (v, parent, w)
    return True, None


def _induced_cycle_certificate(G: Graph) -> tuple:
    """Find an induced cycle of length >= 4 in a non-chordal graph."""
    for v in range(1, G.n + 1):
        nb = list(_bits(G.adj[v]))
        for u, w in combinations(nb, 2):
            if G.adjacent(u, w):
                continue
            # shortest u-w path avoiding v and all other neighbors of v
            allowed = G.vertex_mask & ~(G.adj[v] | (1 << v))
            allowed |= (1 << u) | (1 << w)
            prev = {u: None}
            frontier = [u]
            while frontier and w not in prev:
                nxt = []
                for a in frontier:
                    for b in _bits(G.adj[a] & allowed):
                        if b not in prev:
                            prev[b] = a
                            nxt.append(b)
                frontier = nxt
            if w not in prev:
                continue
            path = [w]
            while path[-1] != u:
                path.append(prev[path[-1]])
            cycle = tuple([v] + path[::-1])
            assert _is_induced_cycle(G, cycle)
            return cycle
    raise AssertionError("no induced long cycle found in non-chordal graph")


def _is_induced_cycle(G: Graph, cycle) -> bool:
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for a in range(k):
        for b in range(a + 1, k):
            adjacent = G.adjacent(cycle[a], cycle[b])
            consecutive = (b == a + 1) or (a == 0 and b == k - 1)
            if adjacent != consecutive:
                return False
    return True


def is_chordal(G: Graph) -> tuple:
    """(True, perfect elimination order) or (False, induced >=4 cycle)."""
    order = lexbfs(G)
    peo = tuple(reversed(order))
    ok, _ = _peo_check(G, peo)
    if ok:
        return True, peo
    return False, _induced_cycle_certificate(G)


# --------------------------------------------------------------- cliques


@dataclass(frozen=True)
class CliqueCover:
    """The inclusion-maximal cliques; for closed graphs in the
    Cohen-Macaulay position, also the interval endpoints."""

    cliques: tuple                 # sorted tuple of sorted vertex tuples
    interval_form: tuple | None = None


def maximal_cliques(G: Graph) -> CliqueCover:
    """All inclusion-maximal cliques (pivoted Bron-Kerbosch on bitsets)."""
    out = []
    adj = G.adj

    def expand(r_mask: int, p_mask: int, x_mask: int):
        if not p_mask and not x_mask:
            out.append(r_mask)
            return
        pool = p_mask | x_mask
        pivot = -1
        best = -1
        for u in _bits(pool):
            c = bin(p_mask & adj[u]).count("1")
            if c > best:
                best, pivot = c, u
        for v in _bits(p_mask & ~adj[pivot]):
            expand(r_mask | (1 << v), p_mask & adj[v], x_mask & adj[v])
            p_mask &= ~(1 << v)
            x_mask |= 1 << v

    expand(0, G.vertex_mask, 0)
    cliques = sorted(tuple(sorted(_bits(m))) for m in out)
    return CliqueCover(tuple(cliques))


def clique_memberships(G: Graph) -> dict:
    """vertex -> number of maximal cliques containing it."""
    counts = {v: 0 for v in range(1, G.n + 1)}
    for c in maximal_cliques(G).cliques:
        for v in c:
            counts[v] += 1
    return counts


# --------------------------------------------- forbidden induced patterns

CLAW_EDGES = ((1, 2), (1, 3), (1, 4))
NET_EDGES = ((1, 2), (2, 3), (2, 5), (3, 4), (3, 5), (5, 6))
TENT_EDGES = ((1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 6),
              (3, 5), (3, 6))


@dataclass(frozen=True)
class ForbiddenScan:
    claw: tuple | None
    net: tuple | None
    tent: tuple | None


def is_induced_embedding(G: Graph, pattern_edges, pattern_n: int,
                         mapping) -> bool:
    """Check that mapping (pattern vertex -> G vertex) is injective and
    sends edges to edges, non-edges to non-edges."""
    if len(set(mapping)) != pattern_n:
        return False
    eset = set(pattern_edges)
    for a in range(1, pattern_n + 1):
        for b in range(a + 1, pattern_n + 1):
            want = (a, b) in eset
            if G.adjacent(mapping[a - 1], mapping[b - 1]) != want:
                return False
    return True


def _find_claw(G: Graph):
    for c in range(1, G.n + 1):
        nb = list(_bits(G.adj[c]))
        if len(nb) < 3:
            continue
        for trio in combinations(nb, 3):
            a, b, d = trio
            if not (G.adjacent(a, b) or G.adjacent(a, d) or G.adjacent(b, d)):
                return (c, a, b, d)
    return None


def _triangles(G: Graph):
    for a in range(1, G.n + 1):
        for b in _bits(G.adj[a]):
            if b <= a:
                continue
            for c in _bits(G.adj[a] & G.adj[b]):
                if c > b:
                    yield a, b, c


def _find_net(G: Graph):
    for a, b, c in _triangles(G):
        tri = (1 << a) | (1 << b) | (1 << c)
        pend_a = G.adj[a] & ~(G.adj[b] | G.adj[c] | tri)
        pend_b = G.adj[b] & ~(G.adj[a] | G.adj[c] | tri)
        pend_c = G.adj[c] & ~(G.adj[a] | G.adj[b] | tri)
        for pa in _bits(pend_a):
            for pb in _bits(pend_b & ~G.adj[pa] & ~(1 << pa)):
                for pc in _bits(pend_c & ~G.adj[pa] & ~G.adj[pb]
                                & ~(1 << pa) & ~(1 << pb)):
                    # pattern: pendant 1 at 2, pendant 4 at 3, pendant 6 at 5
                    return (pa, a, b, pb, c, pc)
    return None


def _find_tent(G: Graph):
    for a, b, c in _triangles(G):
        tri = (1 << a) | (1 << b) | (1 << c)
        uab = G.adj[a] & G.adj[b] & ~G.adj[c] & ~tri
        uac = G.adj[a] & G.adj[c] & ~G.adj[b] & ~tri
        ubc = G.adj[b] & G.adj[c] & ~G.adj[a] & ~tri
        for u in _bits(uab):
            for v in _bits(uac & ~G.adj[u] & ~(1 << u)):
                for w in _bits(ubc & ~G.adj[u] & ~G.adj[v]
                               & ~(1 << u) & ~(1 << v)):
                    return (a, b, c, u, v, w)
    return None


def forbidden_subgraph_scan(G: Graph) -> ForbiddenScan:
    """Induced claw / net / tent embeddings (or their absence).

    Each witness is the image tuple of pattern vertices 1..4 or 1..6;
    witnesses are re-verified as induced embeddings before returning.
    """
    claw = _find_claw(G)
    net = _find_net(G)
    tent = _find_tent(G)
    if claw is not None:
        assert is_induced_embedding(G, CLAW_EDGES, 4, claw)
    if net is not None:
        assert is_induced_embedding(G, NET_EDGES, 6, net)
    if tent is not None:
        assert is_induced_embedding(G, TENT_EDGES, 6, tent)
    return ForbiddenScan(claw, net, tent)


# --------------------------------------------------------- closed graphs


def closed_under_labeling(G: Graph, order=None) -> bool:
    """Scan for the interval condition: whenever i < j < k and {i,k} is
    an edge, both {i,j} and {j,k} are edges.  ``order`` lists vertices
    by their new labels; identity when omitted."""
    if order is None:
        order = tuple(range(1, G.n + 1))
    pos = {v: i for i, v in enumerate(order)}
    pref = [0] * (G.n + 1)
    for i, v in enumerate(order):
        pref[i + 1] = pref[i] | (1 << v)
    for (a, b) in G.edges:
        pa, pb = pos[a], pos[b]
        if pa > pb:
            a, b, pa, pb = b, a, pb, pa
        between = pref[pb] & ~pref[pa + 1]
        if between & ~G.adj[a] or between & ~G.adj[b]:
            return False
    return True


def _search_closed_labeling(G: Graph):
    """Exhaustive search (with pruning) for an order passing the scan."""
    n = G.n
    adj = G.adj
    order: list = []
    pref = [0]

    def can_place(v: int) -> bool:
        placed = pref[-1]
        for i, u in enumerate(order):
            if adj[u] >> v & 1:
                between = placed & ~pref[i + 1]
                if between & ~adj[u] or between & ~adj[v]:
                    return False
        return True

    def rec() -> bool:
        if len(order) == n:
            return True
        placed = pref[-1]
        for v in range(1, n + 1):
            if placed >> v & 1:
                continue
            if can_place(v):
                order.append(v)
                pref.append(placed | (1 << v))
                if rec():
                    return True
                order.pop()
                pref.pop()
        return False

    if rec():
        return tuple(order)
    return None


def recognize_closed(G: Graph):
    """A relabeling sigma (sigma[v] = new label) under which the interval
    condition holds, or None when no labeling exists.

    Fast path: three LexBFS sweeps, whose final order is a proper
    interval order whenever one exists; the result is always verified by
    the quadratic-triple scan, with an exhaustive pruned search as the
    fallback decision procedure.
    """
    s1 = lexbfs(G)
    s2 = lexbfs(G, tie_priority=s1)
    s3 = lexbfs(G, tie_priority=s2)
    for cand in (s3, tuple(reversed(s3))):
        if closed_under_labeling(G, cand):
            return _order_to_sigma(cand)
    order = _search_closed_labeling(G)
    if order is None:
        return None
    assert closed_under_labeling(G, order)
    return _order_to_sigma(order)


def _order_to_sigma(order) -> tuple:
    sigma = [0] * (len(order) + 1)
    for i, v in enumerate(order):
        sigma[v] = i + 1
    return tuple(sigma)


# ---------------------------------------------------------- cut-point sets


@dataclass(frozen=True)
class CutSet:
    """A vertex set whose removal is minimally disconnecting: restoring
    any of its members strictly drops the component count."""

    W: tuple
    components: tuple
    c: int


def _component_count(G: Graph, removed_mask: int) -> int:
    return len(_components_masked(G, G.vertex_mask & ~removed_mask))


def cut_point_sets(G: Graph) -> tuple:
    """All cut-point sets, the empty set included, each with the
    component partition of the complement."""
    n = G.n
    out = []
    for size in range(0, n):
        for combo in combinations(range(1, n + 1), size):
            w_mask = 0
            for v in combo:
                w_mask |= 1 << v
            comps = _components_masked(G, G.vertex_mask & ~w_mask)
            c = len(comps)
            ok = True
            for v in combo:
                if _component_count(G, w_mask & ~(1 << v)) >= c:
                    ok = False
                    break
            if ok:
                parts = tuple(sorted(tuple(sorted(_bits(m))) for m in comps))
                out.append(CutSet(combo, parts, c))
    return tuple(out)


# ------------------------------------------------------ induced paths


def longest_induced_path(G: Graph, *, max_n: int = 12) -> int:
    """Edge count of a longest induced path (exhaustive, pruned DFS)."""
    if G.n > max_n:
        raise CapacityError(f"induced-path search capped at {max_n} vertices")
    adj = G.adj
    best = 0

    def extend(last: int, closed_mask: int, length: int):
        # closed_mask: the path so far plus all neighbors of its interior,
        # so a candidate is adjacent to the tip and nothing else on the path
        nonlocal best
        if length > best:
            best = length
        for v in _bits(adj[last] & ~closed_mask):
            extend(v, closed_mask | adj[last] | (1 << v), length + 1)

    for start in range(1, G.n + 1):
        extend(start, 1 << start, 0)
    return best


def component_path_lengths(G: Graph, *, max_n: int = 12) -> tuple:
    """Longest induced path length within each connected component."""
    out = []
    for comp in connected_components(G):
        sub, _ = induced_subgraph(G, comp)
        out.append(longest_induced_path(sub, max_n=max_n))
    return tuple(out)


# ------------------------------------------- indecomposable components


def _is_clique_mask(G: Graph, mask: int) -> bool:
    for v in _bits(mask):
        if mask & ~(G.adj[v] | (1 << v)):
            return False
    return True


def indecomposable_components(G: Graph) -> tuple:
    """(r, pieces): the unique splitting at cut vertices all of whose
    branch attachments are cliques; pieces are sorted vertex tuples and
    overlap only in such split vertices."""
    pieces = []
    work = [m for m in _components_masked(G, G.vertex_mask)]
    while work:
        mask = work.pop()
        split_done = False
        for v in sorted(_bits(mask)):
            rest = mask & ~(1 << v)
            comps = _components_masked(G, rest)
            if len(comps) < 2:
                continue
            if all(_is_clique_mask(G, G.adj[v] & c) for c in comps):
                for c in comps:
                    work.append(c | (1 << v))
                split_done = True
                break
        if not split_done:
            pieces.append(tuple(sorted(_bits(mask))))
    pieces.sort()
    return len(pieces), tuple(pieces)


# ------------------------------------------------------------- blocks


@dataclass(frozen=True)
class BlockClassification:
    is_block: bool
    blocks: tuple            # vertex tuples of biconnected components
    cm_by_vertex_rule: bool


def biconnected_components(G: Graph) -> tuple:
    """Vertex sets of the biconnected components (bridges included)."""
    n = G.n
    disc = [0] * (n + 1)
    low = [0] * (n + 1)
    timer = [1]
    edge_stack: list = []
    blocks: list = []

    def dfs(u: int, parent: int):
        disc[u] = low[u] = timer[0]
        timer[0] += 1
        for v in _bits(G.adj[u]):
            if v == parent:
                continue
            if disc[v] == 0:
                edge_stack.append((u, v))
                dfs(v, u)
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    verts = set()
                    while True:
                        e = edge_stack.pop()
                        verts.update(e)
                        if e == (u, v):
                            break
                    blocks.append(tuple(sorted(verts)))
            elif disc[v] < disc[u]:
                edge_stack.append((u, v))
                low[u] = min(low[u], disc[v])

    for s in range(1, n + 1):
        if disc[s] == 0:
            dfs(s, 0)
    return tuple(sorted(blocks))


def classify_block_graph(G: Graph) -> BlockClassification:
    """Blocks, whether all blocks are cliques, and whether additionally
    no vertex lies in three or more maximal cliques."""
    blocks = biconnected_components(G)
    is_block = True
    for b in blocks:
        mask = 0
        for v in b:
            mask |= 1 << v
        if not _is_clique_mask(G, mask):
            is_block = False
            break
    rule = is_block and all(c <= 2 for c in clique_memberships(G).values())
    return BlockClassification(is_block, blocks, rule)
