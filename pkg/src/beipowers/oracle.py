"""Formula-free graded Betti numbers via Koszul homology, plus a
generic-linear-form depth probe as an independent second witness.

For a monomial ideal the table is computed exactly, one fine multidegree
at a time: the only multidegrees that can carry homology are least
common multiples of subsets of the minimal generators, and at each such
multidegree the Koszul strata collapse to the simplicial complex of
square-free "directions one can step down and stay inside the ideal".
No degree bound is needed; the enumeration is finite and complete.

For a general ideal the table of its initial ideal is computed first by
that route.  Graded Betti numbers can only drop under passing from the
initial ideal back to the ideal (semicontinuity, in any grading both
ideals share), so the support of the initial table bounds the support
of the sought one: Koszul strata of S/I over the standard-monomial
basis are then assembled and ranked only at those multidegrees.  Edge
ideals of graphs and all their powers are homogeneous for the vertex
grading (x_i and y_i both of degree e_i), which keeps every stratum
small; ideals without that structure fall back to the coarse grading.

Depth is read off as (number of variables) - (projective dimension);
regularity as the largest j - i over nonzero entries.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations, product

import numpy as np

from .fields import GF, QQ, DEFAULT_PRIME, PrimeField, RationalField
from .graphs import CapacityError, DomainError, Graph, closed_under_labeling
from .groebner import Ideal
from .hilbert import (dimension_from_numerator, hilbert_numerator, minimalize,
                      _poly_mul)
from .idealops import groebner_mod
from .rings import MON_MASK, Poly, Ring
from . import bei


# --------------------------------------------------------------- ranks


def matmul_mod(A, B, p: int) -> np.ndarray:
    """Exact A @ B mod p through float64 BLAS, chunking the inner
    dimension so every accumulated dot product stays below 2**53."""
    A = np.asarray(A, dtype=np.float64)
    B = np.asarray(B, dtype=np.float64)
    step = max(1, int(2 ** 52) // (p - 1) ** 2)
    inner = A.shape[1]
    if inner <= step:
        return (A @ B) % p
    out = np.zeros((A.shape[0], B.shape[1]))
    for s in range(0, inner, step):
        out = (out + A[:, s:s + step] @ B[s:s + step, :]) % p
    return out


def rank_mod_p_simple(A: np.ndarray, p: int) -> int:
    """Rank over F_p by plain scalar-pivot elimination (reference)."""
    if A.size == 0:
        return 0
    A = np.mod(np.asarray(A, dtype=np.int64), p)
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        col = A[r:, c]
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = A[r] * inv % p
        below = np.flatnonzero(A[r + 1:, c]) + r + 1
        if below.size:
            A[below] = (A[below] - np.outer(A[below, c], A[r])) % p
        r += 1
    return r


def rank_mod_p(A: np.ndarray, p: int, block: int = 48) -> int:
    """Rank over F_p, blocked so the bulk of the elimination runs as
    float64 matrix multiplication.

    Exactness: entries live in [0, p); a Schur update accumulates at
    most ``block`` products bounded by (p-1)^2, which stays far below
    2^53 for the primes used here, so the float arithmetic is exact.
    """
    if A.size == 0:
        return 0
    assert block * (p - 1) ** 2 < 2 ** 53
    A = np.mod(np.asarray(A, dtype=np.float64), p)
    m, n = A.shape
    r = 0
    c = 0
    while r < m and c < n:
        c1 = min(c + block, n)
        # panel factorization on columns c..c1 (multipliers kept in the
        # pivot columns below their pivots; pivot rows scaled from the
        # pivot column rightwards within the panel)
        pivcols = []
        pivinvs = []
        for j in range(c, c1):
            rr = r + len(pivcols)
            if rr >= m:
                break
            nz = np.flatnonzero(A[rr:, j])
            if nz.size == 0:
                continue
            piv = rr + int(nz[0])
            if piv != rr:
                A[[rr, piv]] = A[[piv, rr]]
            inv = float(pow(int(A[rr, j]), p - 2, p))
            A[rr, j:c1] = A[rr, j:c1] * inv % p
            below = A[rr + 1:, j].copy()
            mask = np.flatnonzero(below)
            if mask.size and j + 1 < c1:
                rows_idx = mask + rr + 1
                cols_idx = np.arange(j + 1, c1)
                A[np.ix_(rows_idx, cols_idx)] = (
                    A[np.ix_(rows_idx, cols_idx)]
                    - np.outer(below[mask], A[rr, j + 1:c1])) % p
            pivcols.append(j)
            pivinvs.append(inv)
        k = len(pivcols)
        if k == 0:
            c = c1
            continue
        if c1 < n:
            # forward-substitute the pivot rows' trailing parts, each
            # then scaled by the inverse saved from the panel phase
            for s in range(k):
                row = r + s
                for t in range(s):
                    mult = A[row, pivcols[t]]
                    if mult:
                        A[row, c1:] = (A[row, c1:]
                                       - mult * A[r + t, c1:]) % p
                if pivinvs[s] != 1.0:
                    A[row, c1:] = A[row, c1:] * pivinvs[s] % p
            if r + k < m:
                L = A[r + k:, :][:, pivcols]
                if L.any():
                    U = A[r:r + k, c1:]
                    A[r + k:, c1:] = (A[r + k:, c1:] - L @ U) % p
        r += k
        c = c1
    return r


def rank_exact(rows: list) -> int:
    """Rank over the rationals (fraction-free enough for small blocks)."""
    mat = [list(map(Fraction, row)) for row in rows]
    if not mat or not mat[0]:
        return 0
    ncols = len(mat[0])
    rank = 0
    for c in range(ncols):
        piv = None
        for i in range(rank, len(mat)):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pr = mat[rank]
        inv = 1 / pr[c]
        mat[rank] = [x * inv for x in pr]
        pr = mat[rank]
        for i in range(rank + 1, len(mat)):
            f = mat[i][c]
            if f:
                mat[i] = [a - f * b for a, b in zip(mat[i], pr)]
        rank += 1
        if rank == len(mat):
            break
    return rank


def _rank(matrix, field) -> int:
    if isinstance(field, PrimeField):
        return rank_mod_p(matrix, field.char)
    return rank_exact(matrix)


# ---------------------------------------------------------- Betti table


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers of a cyclic quotient S/I."""

    entries: dict = dc_field(repr=False)   # (i, j) -> nonzero multiplicity
    nvars: int = 0
    pd: int = 0
    reg: int = 0
    depth: int = 0
    truncated: bool = False
    field_char: int = DEFAULT_PRIME

    def __post_init__(self):
        assert self.entries.get((0, 0)) == 1
        assert all(i == 0 or v > 0 for (i, _), v in self.entries.items())
        assert all(j == 0 for (i, j) in self.entries if i == 0)
        assert self.pd <= self.nvars

    def beta(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def to_json_dict(self) -> dict:
        table: dict = {}
        for (i, j), v in sorted(self.entries.items()):
            table.setdefault(str(i), {})[str(j)] = v
        return {"table": table, "pd": self.pd, "reg": self.reg,
                "depth": self.depth, "truncated": self.truncated,
                "field": self.field_char}

    def format_triangle(self) -> str:
        """Macaulay-style display: row r, column i holds beta_{i, i+r}."""
        if not self.entries:
            return "(zero module)"
        imax = self.pd
        rmax = self.reg
        width = max(len(str(v)) for v in self.entries.values())
        width = max(width, len(str(imax)), 2)
        lines = ["    " + " ".join(f"{i:>{width}}" for i in range(imax + 1))]
        for r in range(rmax + 1):
            cells = []
            for i in range(imax + 1):
                v = self.entries.get((i, i + r), 0)
                cells.append(f"{v if v else '.':>{width}}")
            lines.append(f"{r:>3} " + " ".join(cells))
        return "\n".join(lines)


def _assemble(entries: dict, nvars: int, truncated: bool, field) -> BettiTable:
    entries = {k: v for k, v in entries.items() if v}
    entries[(0, 0)] = 1
    pd = max(i for i, _ in entries)
    reg = max(j - i for i, j in entries)
    char = field.char if isinstance(field, PrimeField) else 0
    return BettiTable(entries, nvars, pd, reg, nvars - pd, truncated, char)


# -------------------------------------- monomial ideals: lcm-lattice route


def lcm_lattice(mons, ring: Ring, cap: int) -> set:
    """Closure of the minimal generators under pairwise lcm."""
    lattice = set(mons)
    frontier = list(lattice)
    lcm = ring.lcm
    while frontier:
        fresh = []
        for b in frontier:
            for g in mons:
                u = lcm(b, g)
                if u not in lattice:
                    lattice.add(u)
                    fresh.append(u)
        if len(lattice) > cap:
            raise CapacityError(f"lcm lattice exceeded {cap} elements")
        frontier = fresh
    return lattice


def _upper_koszul_betti(b: int, gens_b: list, ring: Ring, field,
                        check_dd: bool) -> dict:
    """Nonzero beta_{i,b}(S/I) at one lattice multidegree.

    The complex consists of the subsets T of the support of b such that
    dropping one step in each direction of T stays inside the ideal; the
    homology of its boundary gives the Betti numbers at b.
    """
    supp = ring.support(b)
    s = len(supp)
    divides = ring.divides
    var_mon = ring.var_mon
    full_drop = b - sum(var_mon(v) for v in supp)
    if any(divides(g, full_drop) for g in gens_b):
        return {}          # full simplex, contractible
    faces_by_size: list = [[] for _ in range(s + 1)]
    faces_by_size[0].append(())
    for size in range(1, s + 1):
        for T in combinations(supp, size):
            m = b
            for v in T:
                m -= var_mon(v)
            if any(divides(g, m) for g in gens_b):
                faces_by_size[size].append(T)
    out = {}
    ranks = [0] * (s + 2)
    mats = [None] * (s + 1)
    for size in range(1, s + 1):
        cols = faces_by_size[size]
        rows = faces_by_size[size - 1]
        if not cols or not rows:
            continue
        index = {T: r for r, T in enumerate(rows)}
        A = np.zeros((len(rows), len(cols)), dtype=np.int64)
        for cidx, T in enumerate(cols):
            for pos in range(size):
                sub = T[:pos] + T[pos + 1:]
                r = index.get(sub)
                if r is not None:
                    A[r, cidx] = 1 if pos % 2 == 0 else -1
        mats[size] = A
        ranks[size] = _rank(A.copy() if isinstance(field, PrimeField) else A,
                            field)
    if check_dd:
        p = field.char if isinstance(field, PrimeField) else 0
        for size in range(2, s + 1):
            if mats[size] is not None and mats[size - 1] is not None:
                prod = mats[size - 1] @ mats[size]
                if p:
                    prod %= p
                assert not prod.any(), "koszul differential square is nonzero"
    for i in range(1, s + 2):
        n_faces = len(faces_by_size[i - 1]) if i - 1 <= s else 0
        beta = n_faces - ranks[i - 1] - ranks[i]
        if beta:
            out[i] = beta
    return out


_fine_cache: dict = {}


def monomial_betti_fine(mons, ring: Ring, field, *, cap: int = 400000,
                        check_dd: bool = True) -> dict:
    """Fine-graded Betti numbers {(i, multidegree) -> beta} of S/(mons),
    complete (no truncation), for i >= 1."""
    mons = minimalize(mons, ring)
    if not mons:
        return {}
    if any(m == 0 for m in mons):
        raise ValueError("unit ideal")
    char = field.char if isinstance(field, PrimeField) else 0
    key = (ring.names, char, mons, check_dd)
    got = _fine_cache.get(key)
    if got is not None:
        return got
    out = {}
    for b in lcm_lattice(mons, ring, cap):
        gens_b = [g for g in mons if ring.divides(g, b)]
        for i, beta in _upper_koszul_betti(b, gens_b, ring, field,
                                           check_dd).items():
            out[(i, b)] = beta
    if len(_fine_cache) > 64:
        _fine_cache.clear()
    _fine_cache[key] = out
    return out


def monomial_betti_table(mons, ring: Ring, field, **kw) -> dict:
    """Coarse (i, degree) table from the fine route."""
    coarse: dict = {}
    for (i, b), beta in monomial_betti_fine(mons, ring, field, **kw).items():
        key = (i, ring.deg(b))
        coarse[key] = coarse.get(key, 0) + beta
    return coarse


# ------------------------------- general ideals: graded Koszul strata


@dataclass(frozen=True)
class KoszulStratum:
    """One graded piece of the Koszul complex of S/I: the differential
    from exterior degree i into i-1, restricted to one multidegree, in
    the basis of (variable subset, standard monomial) pairs."""

    i: int
    multidegree: tuple
    degree: int
    rows: int
    cols: int
    matrix: object = dc_field(repr=False)   # ndarray mod p, Fraction rows over Q


def _pair_ring_size(ring: Ring):
    names = ring.names
    if len(names) % 2 or not names:
        return None
    n = len(names) // 2
    want = tuple(f"x{i}" for i in range(1, n + 1)) + \
        tuple(f"y{i}" for i in range(1, n + 1))
    return n if names == want else None


def _vertex_degree(ring: Ring, n: int, m: int) -> tuple:
    exps = ring.exps(m)
    return tuple(exps[v] + exps[n + v] for v in range(n))


def _is_vertex_graded(I: Ideal, n: int) -> bool:
    for g in I.groebner_basis():
        degs = {_vertex_degree(I.ring, n, m) for m in g.terms}
        if len(degs) > 1:
            return False
    return True


class _KoszulFrame:
    """Shared scaffolding for the graded strata of one quotient S/I:
    the standard-monomial bases and the normal forms of (variable times
    standard monomial), cached across multidegrees, strata and fields."""

    def __init__(self, I: Ideal, vertex_n):
        self.I = I
        self.ring = I.ring
        self.vertex_n = vertex_n        # None -> coarse grading
        self.lms = sorted(I.initial_gens())
        self._std_cache: dict = {}
        self._nf_cache: dict = {}
        self._basis_cache: dict = {}
        if vertex_n is None:
            self.var_degrees = [(1,)] * self.ring.nvars
        else:
            self.var_degrees = [
                tuple(1 if w == v % vertex_n else 0 for w in range(vertex_n))
                for v in range(self.ring.nvars)]

    def monomial_degree(self, m: int) -> tuple:
        if self.vertex_n is None:
            return (self.ring.deg(m),)
        return _vertex_degree(self.ring, self.vertex_n, m)

    def is_standard(self, m: int) -> bool:
        guard = self.ring._guard
        for lm in self.lms:
            if lm > m:
                break
            if (m | guard) - lm & guard == guard:
                return False
        return True

    def standard_basis(self, a: tuple) -> tuple:
        """Standard monomials of S/I in multidegree ``a``, sorted."""
        got = self._std_cache.get(a)
        if got is not None:
            return got
        ring = self.ring
        n = self.vertex_n
        mons = []
        if n is None:
            d = a[0]
            nv = ring.nvars

            def compose(idx: int, left: int, m: int):
                if idx == nv - 1:
                    mons.append(m + left * ring.var_mon(idx))
                    return
                for e in range(left + 1):
                    compose(idx + 1, left - e, m + e * ring.var_mon(idx))

            compose(0, d, 0)
        else:
            splits = []
            for v in range(n):
                splits.append([(ex, a[v] - ex) for ex in range(a[v] + 1)])
            for choice in product(*splits):
                m = 0
                for v, (ex, ey) in enumerate(choice):
                    m += ex * ring.var_mon(v) + ey * ring.var_mon(n + v)
                mons.append(m)
        std = tuple(sorted(m for m in mons if self.is_standard(m)))
        self._std_cache[a] = std
        return std

    def normal_form_terms(self, m: int):
        """Normal form of the monomial m as ((standard monomial, coeff)...)
        over the ideal's own coefficient field."""
        got = self._nf_cache.get(m)
        if got is None:
            if self.is_standard(m):
                got = ((m, self.I.ring.field.coerce(1)),)
            else:
                nf = self.I.normal_form(self.ring.monomial_poly(m))
                got = tuple(sorted(nf.terms.items()))
            self._nf_cache[m] = got
        return got

    def basis_at(self, a: tuple, i: int) -> list:
        """Koszul basis pairs (T, m) with |T| = i at multidegree a."""
        key = (a, i)
        got = self._basis_cache.get(key)
        if got is not None:
            return got
        ring = self.ring
        out = []
        for T in combinations(range(ring.nvars), i):
            rem = list(a)
            ok = True
            for v in T:
                dv = self.var_degrees[v]
                for w, x in enumerate(dv):
                    rem[w] -= x
                    if rem[w] < 0:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            for m in self.standard_basis(tuple(rem)):
                out.append((T, m))
        self._basis_cache[key] = out
        return out

    def stratum(self, a: tuple, i: int, field) -> KoszulStratum:
        """Differential matrix from exterior degree i into i-1 at
        multidegree a, over ``field``."""
        ring = self.ring
        cols = self.basis_at(a, i)
        rows = self.basis_at(a, i - 1)
        prime = field.char if isinstance(field, PrimeField) else 0
        index = {key: r for r, key in enumerate(rows)}
        if prime:
            A = np.zeros((len(rows), len(cols)), dtype=np.int64)
        else:
            A = [[Fraction(0)] * len(cols) for _ in range(len(rows))]
        for cidx, (T, m) in enumerate(cols):
            for pos, v in enumerate(T):
                sign = 1 if pos % 2 == 0 else -1
                sub = T[:pos] + T[pos + 1:]
                for (u, coeff) in self.normal_form_terms(m + ring.var_mon(v)):
                    # multigraded reduction keeps the multidegree, so the
                    # target pair is always a basis element
                    ridx = index[(sub, u)]
                    if prime:
                        c = coeff
                        if isinstance(c, Fraction):
                            num = c.numerator % prime
                            den = c.denominator % prime
                            c = num * pow(den, prime - 2, prime) % prime
                        A[ridx, cidx] = (A[ridx, cidx] + sign * c) % prime
                    else:
                        A[ridx][cidx] += sign * coeff
        return KoszulStratum(i, a, sum(a), len(rows), len(cols), A)


def _entries_at_multidegree(frame: _KoszulFrame, a: tuple, needed, field,
                            check_dd: bool) -> dict:
    """Homology dimensions at multidegree a for the exterior degrees in
    ``needed`` only; everything else at this multidegree is zero by
    semicontinuity against the initial ideal and is never ranked."""
    prime = field.char if isinstance(field, PrimeField) else 0
    built: dict = {}
    ranks: dict = {}

    def rank_of(idx: int) -> int:
        if idx < 1 or idx > frame.ring.nvars:
            return 0
        got = ranks.get(idx)
        if got is None:
            if not frame.basis_at(a, idx) or not frame.basis_at(a, idx - 1):
                ranks[idx] = 0
                return 0
            st = frame.stratum(a, idx, field)
            built[idx] = st
            if prime:
                got = rank_mod_p(st.matrix, prime)
            else:
                got = rank_exact(st.matrix)
            ranks[idx] = got
        return got

    out = {}
    for i in sorted(needed):
        n_i = len(frame.basis_at(a, i))
        if not n_i:
            continue
        beta = n_i - rank_of(i) - rank_of(i + 1)
        assert beta >= 0
        if beta:
            out[i] = beta
    if check_dd and prime:
        for i, st in built.items():
            nxt = built.get(i + 1)
            if nxt is not None and st.cols and nxt.cols:
                prod = matmul_mod(st.matrix, nxt.matrix, prime)
                assert not prod.any(), "koszul differential square is nonzero"
    return out


# ----------------------------------------------------------- main entry


_frame_cache: dict = {}


def _frame_for(I: Ideal, vertex_n) -> _KoszulFrame:
    key = (id(I), vertex_n)
    frame = _frame_cache.get(key)
    if frame is None or frame.I is not I:
        frame = _KoszulFrame(I, vertex_n)
        _frame_cache[key] = frame
    return frame


def betti_table(I: Ideal, degree_bound: int | None = None,
                field=None, *, check_dd: bool = True,
                use_rigidity: bool = True,
                lattice_cap: int = 400000) -> BettiTable:
    """Graded Betti numbers of S/I by Koszul homology over the
    standard-monomial basis.

    Monomial ideals are handled exactly on their lcm lattice.  Other
    ideals first get the table of their initial ideal; graded Betti
    numbers only drop when passing from the initial ideal back to the
    ideal, so the support of that table bounds the support of the sought
    one, and only those strata are assembled and ranked.

    With ``use_rigidity`` (the default), a stratum whose candidate
    homological indices all share one parity is not ranked at all: the
    multigraded Hilbert functions of S/I and S/in(I) coincide, so the
    alternating sum of the two columns agrees, and semicontinuity pins
    every entry to the initial ideal's value.  Strata with mixed parity
    are always ranked.  Pass ``use_rigidity=False`` to force honest rank
    computations everywhere (the conjecture-evidence harness does).

    The optional ``degree_bound`` truncates the reported table (flagging
    whether anything nonzero was cut); the computation itself is
    complete, so an unbounded call never returns a truncated table.
    """
    field = field or GF(DEFAULT_PRIME)
    ring = I.ring
    if isinstance(ring.field, PrimeField) and field != ring.field:
        raise ValueError("prime-field ideal can only be ranked in its own field")
    if I.is_zero():
        return _assemble({}, ring.nvars, False, field)
    if any(g.degree() == 0 for g in I.gens):
        raise ValueError("unit ideal")

    monomial_input = all(len(g) == 1 for g in I.gens)
    if monomial_input:
        mons = [next(iter(g.terms)) for g in I.gens]
        entries = monomial_betti_table(mons, ring, field, cap=lattice_cap,
                                       check_dd=check_dd)
    else:
        if any(not g.is_homogeneous() for g in I.groebner_basis()):
            raise ValueError("betti_table needs a homogeneous ideal")
        in_fine = monomial_betti_fine(I.initial_gens(), ring, field,
                                      cap=lattice_cap, check_dd=check_dd)
        n = _pair_ring_size(ring)
        vertex_n = n if (n is not None and _is_vertex_graded(I, n)) else None
        frame = _frame_for(I, vertex_n)
        in_proj: dict = {}
        needed_by_a: dict = {}
        for (i, b), beta in in_fine.items():
            a = frame.monomial_degree(b)
            in_proj[(i, a)] = in_proj.get((i, a), 0) + beta
            needed_by_a.setdefault(a, set()).add(i)
        entries = {}
        for a in sorted(needed_by_a):
            iset = needed_by_a[a]
            j = sum(a)
            if use_rigidity and len({i % 2 for i in iset}) == 1:
                for i in iset:
                    entries[(i, j)] = entries.get((i, j), 0) + in_proj[(i, a)]
                continue
            found = _entries_at_multidegree(frame, a, iset, field, check_dd)
            for i, beta in found.items():
                # semicontinuity guard in the shared grading
                assert beta <= in_proj.get((i, a), 0), \
                    "initial-ideal Betti numbers dropped below the ideal's"
                entries[(i, j)] = entries.get((i, j), 0) + beta

    truncated = False
    if degree_bound is not None:
        kept = {}
        for (i, j), v in entries.items():
            if j <= degree_bound:
                kept[(i, j)] = v
            else:
                truncated = True
        entries = kept
    return _assemble(entries, ring.nvars, truncated, field)


# ----------------------------------------------------- consistency checks


def hilbert_consistency(I: Ideal, B: BettiTable) -> bool:
    """Whether the alternating sums of the table reproduce the Hilbert
    series numerator of the initial ideal (always false for truncated
    tables that actually lost entries)."""
    if I.is_zero():
        numer = [1]
    else:
        numer = hilbert_numerator(I.initial_gens(), I.ring)
    alt: dict = {}
    for (i, j), v in B.entries.items():
        alt[j] = alt.get(j, 0) + (v if i % 2 == 0 else -v)
    jmax = max(max(alt, default=0), len(numer) - 1)
    got = [alt.get(j, 0) for j in range(jmax + 1)]
    want = [numer[j] if j < len(numer) else 0 for j in range(jmax + 1)]
    return got == want


# ------------------------------------------------------------ depth probe


def _random_linear_form(ring: Ring, rng: random.Random, support: int) -> Poly:
    p = ring.field.char
    support = min(support, ring.nvars)
    vs = rng.sample(range(ring.nvars), support)
    return Poly(ring, {ring.var_mon(v): rng.randrange(1, p) for v in vs})


def depth_probe_generic_forms(I: Ideal, trials: int = 3, field=None,
                              seed: int = 0, step_attempts: int = 6) -> int:
    """Length of the longest regular sequence of random linear forms
    found on S/I (maximized over trials).

    Regularity of each next form is decided exactly: a linear form is
    regular on a graded quotient iff quotienting by it multiplies the
    Hilbert series by (1 - t), and the numerators on both sides come
    from honestly recomputed bases.  Forms are sparse (one to three
    variables, random nonzero coefficients), which keeps the recomputed
    bases desk-sized, and each step retries a few draws before the trial
    gives up.  The result is always a lower bound for the depth; it
    equals the depth unless every trial drew unlucky forms.
    """
    if trials < 2:
        raise ValueError("need at least two trials")
    field = field or GF(DEFAULT_PRIME)
    if not isinstance(field, PrimeField):
        raise ValueError("the probe works over a prime field")
    if isinstance(I.ring.field, PrimeField):
        if I.ring.field != field:
            raise ValueError("prime-field ideal probed in a different field")
        base_gens = I.groebner_basis()
        ring_p = I.ring
    else:
        base_gens = groebner_mod(I, field)
        ring_p = I.ring.with_field(field)
    if not base_gens:
        return ring_p.nvars
    base = Ideal(ring_p, base_gens)
    numer0 = hilbert_numerator(base.initial_gens(), ring_p)
    cap = dimension_from_numerator(numer0, ring_p.nvars)
    best = 0
    for trial in range(trials):
        rng = random.Random((seed, trial, field.char))
        cur = base
        numer = numer0
        t = 0
        while t < cap:
            want = _poly_mul(numer, [1, -1])
            extended = None
            # sparse draws first; escalate towards dense on retries
            schedule = (2, 2, 3, 1, 4, ring_p.nvars)
            for attempt in range(step_attempts):
                support = schedule[min(attempt, len(schedule) - 1)]
                form = _random_linear_form(ring_p, rng, support)
                nxt = Ideal(ring_p, cur.groebner_basis() + (form,))
                if hilbert_numerator(nxt.initial_gens(), ring_p) == want:
                    extended = nxt
                    break
            if extended is None:
                break
            t += 1
            cur = extended
            numer = want
        best = max(best, t)
        if best == cap:
            break
    return best


# ------------------------------------------------- initial-ideal monotony


def depth_monotone_initial(G: Graph, k_max: int, field=None) -> bool:
    """Whether the oracle depths of S/(in J)^k are non-increasing up to
    k_max.  This is a theorem for closed graphs; the check guards the
    oracle, so a violation raises rather than returning False quietly."""
    if not closed_under_labeling(G):
        raise DomainError("graph is not closed under the given labeling")
    field = field or GF(DEFAULT_PRIME)
    J = bei.binomial_edge_ideal(G)
    if J.is_zero():
        return True
    in1 = J.initial_gens()
    ring = J.ring
    depths = []
    mons = list(in1)
    for k in range(1, k_max + 1):
        if k > 1:
            mons = minimalize([a + b for a in mons for b in in1], ring)
        ideal = Ideal(ring, [ring.monomial_poly(m) for m in mons])
        depths.append(betti_table(ideal, field=field).depth)
    return all(a >= b for a, b in zip(depths, depths[1:]))
