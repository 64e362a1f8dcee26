"""Polynomial rings in lexicographic order, with packed-integer monomials.

A monomial is a single Python int: 16 bits per variable, with the highest
precedence variable in the most significant field.  Consequences used
throughout the package:

* integer comparison of two monomials IS lexicographic comparison,
* monomial multiplication is integer addition,
* divisibility is one guarded subtraction (no per-variable loop).

Exponents must stay below 2**15 so that each field keeps a spare guard
bit; desk-scale inputs never get close.

The only term order supported is lex over the declared variable sequence,
plus an elimination variant with one auxiliary variable ranked above all
others.  The auxiliary variable occupies a fresh field *above* the most
significant one, so monomials of the base ring are valid monomials of the
extended ring with the same integer value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import re

from .fields import QQ

MON_BITS = 16
MON_MASK = (1 << MON_BITS) - 1
MON_MAX = (1 << (MON_BITS - 1)) - 1


@dataclass(frozen=True)
class TermOrder:
    """Description of the monomial order carried by a ring."""

    kind: str              # always "lex"
    names: tuple           # variable sequence, highest first
    elimination: str | None = None   # auxiliary variable name, if any


class Ring:
    """A polynomial ring with a fixed lex order on its variables.

    ``names`` lists the variables from highest to lowest precedence.
    """

    __slots__ = ("field", "names", "nvars", "index", "_shifts", "_guard",
                 "elim_name", "_base")

    def __init__(self, names, field=QQ, elim_name=None, _base=None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.field = field
        self.names = names
        self.nvars = len(names)
        self.index = {nm: i for i, nm in enumerate(names)}
        self._shifts = tuple((self.nvars - 1 - i) * MON_BITS
                             for i in range(self.nvars))
        self._guard = 0
        for s in self._shifts:
            self._guard |= 1 << (s + MON_BITS - 1)
        self.elim_name = elim_name
        self._base = _base

    # ---------- ring relations ----------

    @property
    def order(self) -> TermOrder:
        return TermOrder("lex", self.names, self.elim_name)

    def extended(self, tag: str = "t") -> "Ring":
        """Ring with one auxiliary variable ranked above all others."""
        if tag in self.index:
            raise ValueError(f"variable {tag!r} already present")
        return Ring((tag,) + self.names, self.field, elim_name=tag, _base=self)

    @property
    def base(self) -> "Ring":
        if self._base is None:
            raise ValueError("not an elimination ring")
        return self._base

    def with_field(self, field) -> "Ring":
        if field == self.field:
            return self
        return Ring(self.names, field, self.elim_name,
                    None if self._base is None else self._base.with_field(field))

    def __repr__(self):
        return f"Ring({','.join(self.names)}; {self.field!r})"

    def __eq__(self, other):
        return (isinstance(other, Ring) and other.names == self.names
                and other.field == self.field)

    def __hash__(self):
        return hash((self.names, self.field))

    # ---------- monomials (packed ints) ----------

    def pack(self, exps) -> int:
        m = 0
        for s, e in zip(self._shifts, exps):
            if e < 0 or e > MON_MAX:
                raise ValueError(f"exponent {e} out of range")
            m |= e << s
        return m

    def exps(self, m: int) -> tuple:
        return tuple((m >> s) & MON_MASK for s in self._shifts)

    def deg(self, m: int) -> int:
        d = 0
        while m:
            d += m & MON_MASK
            m >>= MON_BITS
        return d

    def var_mon(self, i: int) -> int:
        return 1 << self._shifts[i]

    def divides(self, a: int, b: int) -> bool:
        """True iff monomial ``a`` divides ``b``."""
        return (b | self._guard) - a & self._guard == self._guard

    def quotient(self, b: int, a: int) -> int:
        """``b / a``; caller guarantees divisibility."""
        return b - a

    def lcm(self, a: int, b: int) -> int:
        m = 0
        for s in self._shifts:
            ea = (a >> s) & MON_MASK
            eb = (b >> s) & MON_MASK
            m |= (ea if ea >= eb else eb) << s
        return m

    def support(self, m: int) -> tuple:
        return tuple(i for i, s in enumerate(self._shifts) if (m >> s) & MON_MASK)

    def mon_str(self, m: int) -> str:
        if m == 0:
            return "1"
        parts = []
        for i, s in enumerate(self._shifts):
            e = (m >> s) & MON_MASK
            if e == 1:
                parts.append(self.names[i])
            elif e > 1:
                parts.append(f"{self.names[i]}^{e}")
        return "*".join(parts)

    # ---------- polynomials ----------

    def poly(self, terms: dict) -> "Poly":
        """Wrap a terms dict; zero coefficients are dropped, the rest
        coerced into the coefficient field."""
        coerce = self.field.coerce
        clean = {}
        for m, c in terms.items():
            c = coerce(c)
            if c:
                clean[m] = c
        return Poly(self, clean)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return Poly(self, {0: self.field.coerce(1)})

    def var(self, name: str) -> "Poly":
        return Poly(self, {self.var_mon(self.index[name]): self.field.coerce(1)})

    def monomial_poly(self, m: int, c=1) -> "Poly":
        return self.poly({m: c})


class Poly:
    """A polynomial: finite map monomial -> nonzero coefficient.

    Values are treated as immutable once constructed.  The leading term is
    the lex-greatest monomial, i.e. ``max`` over the packed keys.
    """

    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lead = None

    # ---------- structure ----------

    def is_zero(self) -> bool:
        return not self.terms

    def lead_mon(self) -> int:
        if self._lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading term")
            self._lead = max(self.terms)
        return self._lead

    def lead_coeff(self):
        return self.terms[self.lead_mon()]

    def degree(self) -> int:
        if not self.terms:
            return -1
        deg = self.ring.deg
        return max(deg(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        deg = self.ring.deg
        degs = {deg(m) for m in self.terms}
        return len(degs) == 1

    def key(self):
        """Canonical hashable form (for dedup and dict keys)."""
        return tuple(sorted(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return (isinstance(other, Poly) and other.ring == self.ring
                and other.terms == self.terms)

    __hash__ = None

    # ---------- arithmetic ----------

    def __add__(self, other: "Poly") -> "Poly":
        terms = dict(self.terms)
        for m, c in other.terms.items():
            acc = terms.get(m)
            if acc is None:
                terms[m] = c
            else:
                acc = acc + c
                if self.ring.field.char:
                    acc %= self.ring.field.char
                if acc:
                    terms[m] = acc
                else:
                    del terms[m]
        return Poly(self.ring, terms)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        p = self.ring.field.char
        if p:
            return Poly(self.ring, {m: (-c) % p for m, c in self.terms.items()})
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = self.ring.field.coerce(other)
            return self.scale(c)
        p = self.ring.field.char
        terms = {}
        if len(self.terms) > len(other.terms):
            big, small = self.terms, other.terms
        else:
            big, small = other.terms, self.terms
        for m1, c1 in small.items():
            for m2, c2 in big.items():
                m = m1 + m2
                c = c1 * c2
                acc = terms.get(m)
                if acc is not None:
                    c = acc + c
                if p:
                    c %= p
                if c:
                    terms[m] = c
                elif acc is not None:
                    del terms[m]
        return Poly(self.ring, terms)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        if not c:
            return Poly(self.ring, {})
        p = self.ring.field.char
        if p:
            return Poly(self.ring, {m: a * c % p for m, a in self.terms.items()})
        return Poly(self.ring, {m: a * c for m, a in self.terms.items()})

    def mul_term(self, c, m: int) -> "Poly":
        """Multiply by the term ``c * x^m``."""
        if not c:
            return Poly(self.ring, {})
        p = self.ring.field.char
        if p:
            return Poly(self.ring, {mm + m: a * c % p for mm, a in self.terms.items()})
        return Poly(self.ring, {mm + m: a * c for mm, a in self.terms.items()})

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def monic(self) -> "Poly":
        lc = self.lead_coeff()
        if lc == self.ring.field.coerce(1):
            return self
        return self.scale(self.ring.field.inv(lc))

    # ---------- presentation ----------

    def __repr__(self):
        return f"Poly({poly_str(self)})"

    def __str__(self):
        return poly_str(self)


# ---------- text format: sum of terms "±c*x1^a*y3^b" ----------

_TOKEN = re.compile(r"\s*([+-]|\d+/\d+|\d+|[A-Za-z][A-Za-z0-9]*|\^|\*)")


def poly_str(f: Poly) -> str:
    if not f.terms:
        return "0"
    ring = f.ring
    out = []
    for m in sorted(f.terms, reverse=True):
        c = f.terms[m]
        neg = (isinstance(c, (int, Fraction)) and ring.field.char == 0 and c < 0)
        mag = -c if neg else c
        body = ring.mon_str(m)
        one = ring.field.coerce(1)
        if mag == one and m != 0:
            piece = body
        elif m == 0:
            piece = str(mag)
        else:
            piece = f"{mag}*{body}"
        if not out:
            out.append(("-" if neg else "") + piece)
        else:
            out.append(("- " if neg else "+ ") + piece)
    return " ".join(out)


class PolyParseError(ValueError):
    pass


def poly_parse(ring: Ring, text: str) -> Poly:
    """Parse the printer's format back into a polynomial (round-trip)."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise PolyParseError(f"bad token at {text[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    terms: dict = {}
    i = 0
    n = len(tokens)
    if n == 0:
        raise PolyParseError("empty polynomial")
    if tokens == ["0"]:
        return ring.zero()
    while i < n:
        sign = 1
        while i < n and tokens[i] in "+-":
            if tokens[i] == "-":
                sign = -sign
            i += 1
        if i >= n:
            raise PolyParseError("dangling sign")
        coeff = Fraction(sign)
        mon = 0
        saw_factor = False
        while True:
            tok = tokens[i]
            if re.fullmatch(r"\d+(/\d+)?", tok):
                coeff *= Fraction(tok)
                i += 1
            elif tok in ring.index:
                i += 1
                e = 1
                if i < n and tokens[i] == "^":
                    i += 1
                    if i >= n or not tokens[i].isdigit():
                        raise PolyParseError("bad exponent")
                    e = int(tokens[i])
                    i += 1
                mon += ring.var_mon(ring.index[tok]) * e
            else:
                raise PolyParseError(f"unexpected token {tok!r}")
            saw_factor = True
            if i < n and tokens[i] == "*":
                i += 1
                continue
            break
        if not saw_factor:
            raise PolyParseError("empty term")
        c = ring.field.coerce(coeff)
        acc = terms.get(mon)
        c = c + acc if acc is not None else c
        if ring.field.char:
            c %= ring.field.char
        if c:
            terms[mon] = c
        elif acc is not None:
            del terms[mon]
    return Poly(ring, terms)


# ---------- the 2n-variable rings used for edge ideals ----------

_pair_ring_cache: dict = {}


def pair_ring(n: int, field=QQ) -> Ring:
    """K[x1..xn, y1..yn] with lex order x1 > ... > xn > y1 > ... > yn."""
    key = (n, field)
    ring = _pair_ring_cache.get(key)
    if ring is None:
        names = tuple(f"x{i}" for i in range(1, n + 1)) + \
                tuple(f"y{i}" for i in range(1, n + 1))
        ring = Ring(names, field)
        _pair_ring_cache[key] = ring
    return ring
