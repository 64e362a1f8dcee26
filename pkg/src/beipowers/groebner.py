"""Buchberger's algorithm and the Ideal type.

The basis returned by :func:`buchberger` is the reduced Groebner basis:
monic, no leading term divides another, every tail fully reduced, sorted
by increasing leading monomial.  The reduced basis is unique for a fixed
(ideal, order), so two ideals are equal iff their reduced bases match
term by term; :meth:`Ideal.equals` relies on exactly that.

Pair management uses the Gebauer-Moeller criteria with normal selection
(smallest lcm in the order, ties broken by generator indices), which
keeps the output path deterministic for a fixed input sequence.
"""

from __future__ import annotations

import bisect
import heapq
import json
import threading

from .rings import Poly, Ring, poly_parse, poly_str


class CapacityError(RuntimeError):
    """A configured desk-scale budget was exceeded."""


def _reduce_full(work: dict, lms: list, polys: list, ring: Ring) -> dict:
    """Full division remainder of the terms dict ``work``.

    ``lms`` is sorted ascending, ``polys[i]`` is monic with leading
    monomial ``lms[i]``.  Monomials are processed largest first; a
    reduction step only introduces smaller monomials, so settled
    (irreducible) ones never need revisiting.
    """
    p = ring.field.char
    guard = ring._guard
    out: dict = {}
    while work:
        m = max(work)
        c = work.pop(m)
        hi = bisect.bisect_right(lms, m)
        red = None
        for i in range(hi):
            if (m | guard) - lms[i] & guard == guard:
                red = polys[i]
                break
        if red is None:
            out[m] = c
            continue
        shift = m - red.lead_mon()
        lead = red.lead_mon()
        if p:
            for mm, cc in red.terms.items():
                if mm == lead:
                    continue
                k = mm + shift
                acc = (work.get(k, 0) - c * cc) % p
                if acc:
                    work[k] = acc
                elif k in work:
                    del work[k]
        else:
            for mm, cc in red.terms.items():
                if mm == lead:
                    continue
                k = mm + shift
                acc = work.get(k, 0) - c * cc
                if acc:
                    work[k] = acc
                elif k in work:
                    del work[k]
    return out


class _Reducer:
    """A division table: polynomials ordered by leading monomial."""

    __slots__ = ("ring", "lms", "polys")

    def __init__(self, ring: Ring, polys=()):
        self.ring = ring
        self.lms: list = []
        self.polys: list = []
        for g in polys:
            self.add(g)

    def add(self, g: Poly):
        lm = g.lead_mon()
        i = bisect.bisect_right(self.lms, lm)
        self.lms.insert(i, lm)
        self.polys.insert(i, g)

    def reduce(self, f: Poly) -> Poly:
        terms = _reduce_full(dict(f.terms), self.lms, self.polys, self.ring)
        return Poly(self.ring, terms)


def normal_form(f: Poly, basis, ring: Ring | None = None) -> Poly:
    """Remainder of ``f`` on division by a family of polynomials.

    No term of the result is divisible by any leading monomial of the
    family; ``f`` minus the result lies in the generated ideal.
    """
    ring = ring or f.ring
    red = _Reducer(ring, (g.monic() for g in basis if not g.is_zero()))
    return red.reduce(f)


def spoly(f: Poly, g: Poly) -> Poly:
    """S-polynomial of two monic polynomials."""
    ring = f.ring
    u = ring.lcm(f.lead_mon(), g.lead_mon())
    return f.mul_term(1, u - f.lead_mon()) - g.mul_term(1, u - g.lead_mon())


def buchberger(gens, ring: Ring | None = None, *,
               max_reductions: int | None = None,
               max_degree: int | None = None) -> tuple:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    ``max_reductions`` / ``max_degree`` are optional safety budgets;
    exceeding one raises :class:`CapacityError`.  Termination itself is
    guaranteed, the budgets only guard runaway desk jobs.
    """
    if ring is None:
        if not gens:
            raise ValueError("need a ring for the empty generating set")
        ring = gens[0].ring
    seen = set()
    work = []
    for g in gens:
        if g.is_zero():
            continue
        g = g.monic()
        k = g.key()
        if k not in seen:
            seen.add(k)
            work.append(g)
    if not work:
        return ()
    work.sort(key=lambda f: (f.lead_mon(), f.key()))

    lcm = ring.lcm
    divides = ring.divides
    basis: list = []
    lms: list = []
    alive: list = []
    heap: list = []            # (lcm, i, j) candidates
    pair_set: dict = {}        # (i, j) -> lcm for currently valid pairs
    reducer = _Reducer(ring)

    def add_generator(h: Poly):
        t = len(basis)
        lm_h = h.lead_mon()
        cand = [(lcm(lms[i], lm_h), i) for i in range(t) if alive[i]]
        keep = []
        for idx, (u, i) in enumerate(cand):
            drop = False
            for jdx, (v, _) in enumerate(cand):
                if jdx == idx:
                    continue
                if v == u:
                    if jdx < idx:
                        drop = True
                        break
                elif divides(v, u):
                    drop = True
                    break
            if not drop:
                keep.append((u, i))
        for (i, j), u in list(pair_set.items()):
            if divides(lm_h, u) and lcm(lms[i], lm_h) != u and \
               lcm(lms[j], lm_h) != u:
                del pair_set[(i, j)]
        for (u, i) in keep:
            if u != lms[i] + lm_h:      # coprime leads reduce to zero
                pair_set[(i, t)] = u
                heapq.heappush(heap, (u, i, t))
        for i in range(t):
            if alive[i] and divides(lm_h, lms[i]):
                alive[i] = False
        basis.append(h)
        lms.append(lm_h)
        alive.append(True)
        reducer.add(h)

    for g in work:
        add_generator(g)

    reductions = 0
    while heap:
        u, i, j = heapq.heappop(heap)
        if pair_set.get((i, j)) != u:
            continue
        del pair_set[(i, j)]
        s = spoly(basis[i], basis[j])
        if s.is_zero():
            continue
        reductions += 1
        if max_reductions is not None and reductions > max_reductions:
            raise CapacityError("buchberger: reduction budget exceeded")
        r = reducer.reduce(s)
        if r.is_zero():
            continue
        h = r.monic()
        if max_degree is not None and h.degree() > max_degree:
            raise CapacityError("buchberger: degree budget exceeded")
        add_generator(h)

    return _interreduce([g for g, ok in zip(basis, alive) if ok], ring)


def _interreduce(basis, ring: Ring) -> tuple:
    """Turn a Groebner basis into the reduced one."""
    basis = sorted((g.monic() for g in basis), key=lambda g: g.lead_mon())
    minimal = []
    for g in basis:
        lm = g.lead_mon()
        if any(ring.divides(h.lead_mon(), lm) for h in minimal):
            continue
        minimal.append(g)
    out = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        red = _Reducer(ring, others)
        r = red.reduce(g)
        assert not r.is_zero(), "interreduction erased a minimal basis element"
        out.append(r.monic())
    out.sort(key=lambda g: g.lead_mon())
    return tuple(out)


class Ideal:
    """An ideal given by generators, with a lazily cached reduced basis.

    The cache is populated once behind a lock: concurrent first access
    serializes, afterwards reads are lock-free.
    """

    def __init__(self, ring: Ring, gens):
        self.ring = ring
        self.gens = tuple(g for g in gens if not g.is_zero())
        for g in self.gens:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
        self._gb = None
        self._reducer = None
        self._lock = threading.Lock()

    def groebner_basis(self, **budget) -> tuple:
        if self._gb is None:
            with self._lock:
                if self._gb is None:
                    self._gb = buchberger(self.gens, self.ring, **budget)
        return self._gb

    def initial_gens(self) -> tuple:
        """Minimal monomial generators of the initial ideal."""
        return tuple(g.lead_mon() for g in self.groebner_basis())

    def _division_table(self) -> _Reducer:
        if self._reducer is None:
            gb = self.groebner_basis()
            with self._lock:
                if self._reducer is None:
                    self._reducer = _Reducer(self.ring, gb)
        return self._reducer

    def normal_form(self, f: Poly) -> Poly:
        return self._division_table().reduce(f)

    def contains(self, f: Poly) -> bool:
        return self.normal_form(f).is_zero()

    def is_zero(self) -> bool:
        return not self.gens

    def equals(self, other: "Ideal") -> bool:
        """Ideal equality through the canonical reduced bases."""
        if self.ring != other.ring:
            return False
        a = self.groebner_basis()
        b = other.groebner_basis()
        return len(a) == len(b) and all(x == y for x, y in zip(a, b))

    def with_groebner_cache(self, gb) -> "Ideal":
        self._gb = tuple(gb)
        return self

    def __repr__(self):
        inner = ", ".join(poly_str(g) for g in self.gens[:4])
        if len(self.gens) > 4:
            inner += f", ... ({len(self.gens)} gens)"
        return f"Ideal({inner})"

    # ---------- serialization: polynomial strings + variable count ----------

    def to_json(self) -> str:
        names = self.ring.names
        n = len(names) // 2 if self.ring.elim_name is None else None
        return json.dumps({
            "nvars": self.ring.nvars,
            "n": n,
            "variables": list(names),
            "generators": [poly_str(g) for g in self.gens],
        })


def ideal_from_json(text: str, field=None) -> Ideal:
    from .fields import QQ
    data = json.loads(text)
    ring = Ring(tuple(data["variables"]), field or QQ)
    return Ideal(ring, [poly_parse(ring, s) for s in data["generators"]])
