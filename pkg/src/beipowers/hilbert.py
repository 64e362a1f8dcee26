"""Hilbert series of monomial quotients and Krull dimension.

The numerator N(t) of the Z-graded Hilbert series

    HS(S/I; t) = N(t) / (1-t)^nvars

is computed by the classical pivot recursion on the minimal monomial
generators: split on a well-chosen variable power p, using

    N(I) = N(I + (p)) + t^deg(p) * N(I : p).

The Krull dimension of S/I is nvars minus the multiplicity of the root
t = 1 in N(t).
"""

from __future__ import annotations

from math import comb

from .groebner import Ideal
from .rings import MON_BITS, MON_MASK, Ring


def minimalize(mons, ring: Ring) -> tuple:
    """Minimal generators among the given monomials, sorted ascending."""
    out: list = []
    for m in sorted(mons, key=ring.deg):
        if not any(ring.divides(g, m) for g in out):
            out.append(m)
    return tuple(sorted(out))


def monomial_intersection(mons_a, mons_b, ring: Ring) -> tuple:
    """Minimal generators of the intersection of two monomial ideals."""
    return minimalize([ring.lcm(a, b) for a in mons_a for b in mons_b], ring)


def _poly_mul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def hilbert_numerator(mons, ring: Ring) -> list:
    """Numerator coefficients of the Hilbert series of S/(mons)."""
    gens = minimalize(mons, ring)
    if any(m == 0 for m in gens):
        raise ValueError("unit ideal")
    return _numerator(gens, ring)


def _try_base(gens: tuple, shifts, ring: Ring):
    """Complete-intersection base case, else a pivot variable.

    The pivot variable must come from a generator of mixed support:
    pivoting on a variable seen only in a pure power can reproduce the
    same ideal in the sum branch and stall the recursion.
    """
    counts = [0] * len(shifts)
    simple = True
    for m in gens:
        supp = [i for i, s in enumerate(shifts) if (m >> s) & MON_MASK]
        if len(supp) > 1:
            simple = False
            for i in supp:
                counts[i] += 1
    if simple:
        out = [1]
        for m in gens:
            d = ring.deg(m)
            out = _poly_mul(out, [1] + [0] * (d - 1) + [-1])
        return out, None
    return None, max(range(len(shifts)), key=lambda i: counts[i])


def _numerator(gens0: tuple, ring: Ring) -> list:
    """Iterative post-order evaluation of the pivot recursion."""
    shifts = ring._shifts
    results: list = []
    stack: list = [("eval", gens0)]
    while stack:
        op, arg = stack.pop()
        if op == "combine":
            off = arg
            n_plus = results.pop()
            n_colon = results.pop()
            out = list(n_plus)
            if len(out) < len(n_colon) + off:
                out.extend([0] * (len(n_colon) + off - len(out)))
            for i, c in enumerate(n_colon):
                out[i + off] += c
            while len(out) > 1 and out[-1] == 0:
                out.pop()
            results.append(out)
            continue
        gens = arg
        if not gens:
            results.append([1])
            continue
        if gens[0] == 0:
            results.append([0])    # unit ideal from a colon branch
            continue
        base, v = _try_base(gens, shifts, ring)
        if base is not None:
            results.append(base)
            continue
        sv = shifts[v]
        emin = min((m >> sv) & MON_MASK for m in gens if (m >> sv) & MON_MASK)
        pivot = emin << sv
        plus = minimalize([pivot] + [m for m in gens
                                     if ((m >> sv) & MON_MASK) < emin], ring)
        colon = minimalize([m - (min((m >> sv) & MON_MASK, emin) << sv)
                            for m in gens], ring)
        stack.append(("combine", emin))
        stack.append(("eval", plus))
        stack.append(("eval", colon))
    assert len(results) == 1
    return results[0]


def dimension_from_numerator(numer: list, nvars: int) -> int:
    """Order of the pole at t = 1, i.e. nvars - mult_(t=1) N."""
    if not any(numer):
        raise ValueError("zero module has no dimension")
    mult = 0
    cur = list(numer)
    while sum(cur) == 0:
        # divide by (1 - t): cumulative sums
        quot = []
        acc = 0
        for c in cur[:-1]:
            acc += c
            quot.append(acc)
        cur = quot if quot else [0]
        mult += 1
    return nvars - mult


def hilbert_function(numer: list, nvars: int, d: int) -> int:
    """Value of the Hilbert function of S/I at degree d."""
    if d < 0:
        return 0
    total = 0
    for k, c in enumerate(numer):
        if k > d:
            break
        if c:
            total += c * comb(d - k + nvars - 1, nvars - 1)
    return total


def hilbert_series_ideal(M: Ideal) -> list:
    """Numerator for an ideal whose generators are monomials."""
    mons = []
    for g in M.gens:
        if len(g.terms) != 1:
            raise ValueError("generator is not a monomial")
        mons.append(next(iter(g.terms)))
    return hilbert_numerator(mons, M.ring)


def krull_dimension(I: Ideal) -> int:
    """dim S/I, through the initial ideal's Hilbert series."""
    if I.is_zero():
        return I.ring.nvars
    numer = hilbert_numerator(I.initial_gens(), I.ring)
    return dimension_from_numerator(numer, I.ring.nvars)
