"""Derived ideal operations: powers, intersection, quotients, field change.

Intersections go through the classical one-tag construction: with an
auxiliary variable t ranked above everything, I cap J is the t-free part
of the ideal generated by t*I and (1-t)*J.  Because the auxiliary
variable is the most significant field of the packed monomials, an
element of the reduced elimination basis is t-free iff its leading
monomial is, and the t-free part of that basis is already the reduced
basis of the intersection.  Nested eliminations run sequentially; there
is never more than one auxiliary variable at a time.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement

from .fields import PrimeField
from .groebner import Ideal, buchberger
from .rings import Poly, Ring


def ideal_power(I: Ideal, k: int) -> Ideal:
    """The ideal generated by all k-fold products of the generators.

    Exact duplicates among the products are pruned; no other
    minimalization is attempted at this stage.
    """
    if k < 1:
        raise ValueError("power must be >= 1")
    if k == 1 or I.is_zero():
        return Ideal(I.ring, I.gens)
    seen = set()
    gens = []
    for combo in combinations_with_replacement(I.gens, k):
        f = combo[0]
        for g in combo[1:]:
            f = f * g
        key = f.key()
        if key not in seen:
            seen.add(key)
            gens.append(f)
    return Ideal(I.ring, gens)


def _to_extended(f: Poly, ext: Ring) -> Poly:
    # base-ring monomials are valid in the extended ring verbatim
    return Poly(ext, dict(f.terms))


def _from_extended(f: Poly, base: Ring) -> Poly:
    return Poly(base, dict(f.terms))


def ideal_intersection(I: Ideal, J: Ideal, **budget) -> Ideal:
    """Intersection via elimination of one auxiliary variable."""
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, ())
    ext = ring.extended("t")
    t_mon = ext.var_mon(0)
    gens = []
    for f in I.gens:
        gens.append(_to_extended(f, ext).mul_term(1, t_mon))
    for g in J.gens:
        ge = _to_extended(g, ext)
        gens.append(ge - ge.mul_term(1, t_mon))      # (1 - t) * g
    gb = buchberger(gens, ext, **budget)
    kept = [_from_extended(h, ring) for h in gb if h.lead_mon() < t_mon]
    out = Ideal(ring, kept)
    out.with_groebner_cache(kept)      # t-free slice of a reduced basis
    return out


def intersect_many(ideals, **budget) -> Ideal:
    """Left fold of pairwise intersections, smallest bases first."""
    ideals = sorted(ideals, key=lambda I: (len(I.gens), sum(len(g) for g in I.gens)))
    if not ideals:
        raise ValueError("empty intersection")
    acc = ideals[0]
    for nxt in ideals[1:]:
        acc = ideal_intersection(acc, nxt, **budget)
    return acc


def poly_divexact(f: Poly, g: Poly) -> Poly:
    """Quotient of an exact division; inexactness is an internal bug."""
    ring = f.ring
    p = ring.field.char
    lm_g = g.lead_mon()
    lc_g = g.lead_coeff()
    inv_lc = ring.field.inv(lc_g)
    work = dict(f.terms)
    quot: dict = {}
    while work:
        m = max(work)
        c = work.pop(m)
        assert ring.divides(lm_g, m), "division not exact"
        shift = m - lm_g
        q = c * inv_lc
        if p:
            q %= p
        quot[shift] = q
        for mm, cc in g.terms.items():
            if mm == lm_g:
                continue
            k = mm + shift
            acc = work.get(k, 0) - q * cc
            if p:
                acc %= p
            if acc:
                work[k] = acc
            elif k in work:
                del work[k]
    return Poly(ring, quot)


def ideal_quotient(I: Ideal, f: Poly, **budget) -> Ideal:
    """The colon ideal (I : f), via (I cap (f)) scaled back by f."""
    if f.is_zero():
        raise ValueError("colon by zero")
    if I.is_zero():
        return Ideal(I.ring, ())
    common = ideal_intersection(I, Ideal(I.ring, (f,)), **budget)
    gens = [poly_divexact(g, f) for g in common.gens]
    return Ideal(I.ring, gens)


def ideal_quotient_ideal(I: Ideal, J: Ideal, **budget) -> Ideal:
    """(I : J) as the intersection of (I : g) over the generators of J."""
    if J.is_zero():
        raise ValueError("colon by the zero ideal")
    parts = [ideal_quotient(I, g, **budget) for g in J.gens]
    return intersect_many(parts, **budget)


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    if I.ring != J.ring:
        raise ValueError("ideals live in different rings")
    return Ideal(I.ring, I.gens + J.gens)


# ---------- coefficient-field change ----------

class BadPrimeError(ArithmeticError):
    """A rational coefficient could not be reduced modulo the prime."""


def poly_mod(f: Poly, ring_p: Ring) -> Poly:
    """Reduce a rational polynomial into a prime-field ring."""
    p = ring_p.field.char
    terms = {}
    for m, c in f.terms.items():
        if isinstance(c, Fraction):
            if c.denominator % p == 0:
                raise BadPrimeError(f"denominator of {c} vanishes mod {p}")
            cc = c.numerator % p * pow(c.denominator % p, p - 2, p) % p
        else:
            cc = int(c) % p
        if cc:
            terms[m] = cc
    return Poly(ring_p, terms)


def ideal_over_field(I: Ideal, field) -> Ideal:
    """The ideal generated by the images of the generators."""
    if I.ring.field == field:
        return I
    if isinstance(I.ring.field, PrimeField):
        raise ValueError("cannot move between distinct prime fields")
    ring_p = I.ring.with_field(field)
    return Ideal(ring_p, [poly_mod(g, ring_p) for g in I.gens])


def groebner_mod(I: Ideal, field) -> tuple:
    """Image of the cached rational reduced basis in a prime field.

    Leading coefficients are 1 so leading monomials survive reduction;
    a prime hitting a denominator raises :class:`BadPrimeError`.  The
    downstream consistency checks (Hilbert alternating sums, two-prime
    agreement) are the guard against a prime that distorts the basis.
    """
    ring_p = I.ring.with_field(field)
    out = []
    for g in I.groebner_basis():
        gp = poly_mod(g, ring_p)
        assert gp.lead_mon() == g.lead_mon()
        out.append(gp)
    return tuple(out)
