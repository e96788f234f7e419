"""Dense integer polynomials and exact real-root certification.

The certified path is all exact arithmetic: integer coefficients for the
public type, rationals inside the Sturm chains.  Coefficient lists are
constant-term first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Optional, Sequence, Union

from .errors import ZeroAtOrigin, ZeroPolynomial

Rational = Union[int, Fraction]

# ---------------------------------------------------------------------------
# rational dense polynomials (internal): tuples of Fraction, constant first
# ---------------------------------------------------------------------------


def _norm(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _deg(p: tuple[Fraction, ...]) -> int:
    return len(p) - 1


def _sub(p, q):
    n = max(len(p), len(q))
    return _norm([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)])


def _mul(p, q):
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _norm(out)


def _divmod(p, q):
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    lead = q[-1]
    while len(r) >= len(q) and _norm(r):
        r = list(_norm(r))
        if len(r) < len(q):
            break
        shift = len(r) - len(q)
        c = r[-1] / lead
        quo[shift] = c
        for i, b in enumerate(q):
            r[shift + i] -= c * b
        r.pop()
    return _norm(quo), _norm(r)


def _deriv(p):
    return _norm([i * c for i, c in enumerate(p)][1:])


def _eval(p, x: Rational) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _gcd_rat(p, q):
    """Monic gcd over the rationals."""
    a, b = _norm(p), _norm(q)
    while b:
        a, b = b, _divmod(a, b)[1]
    if a:
        lead = a[-1]
        a = tuple(c / lead for c in a)
    return a


# ---------------------------------------------------------------------------
# public integer polynomial type
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; () is the zero polynomial, leading coeff nonzero."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = list(self.coeffs)
        for c in coeffs:
            if not isinstance(c, int):
                raise TypeError("coefficients must be integers")
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: Rational) -> Rational:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def content(self) -> int:
        return reduce(gcd, (abs(c) for c in self.coeffs), 0)

    def primitive_positive(self) -> "IntPolynomial":
        """Divide out the content and make the leading coefficient positive."""
        if self.is_zero:
            raise ZeroPolynomial("zero polynomial has no primitive part")
        c = self.content()
        if self.coeffs[-1] < 0:
            c = -c
        return IntPolynomial(tuple(a // c for a in self.coeffs))

    def reversed(self) -> "IntPolynomial":
        return IntPolynomial(tuple(reversed(self.coeffs)))

    @property
    def is_unit_constant(self) -> bool:
        return self.coeffs in ((1,), (-1,))

    def _rat(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c) for c in self.coeffs)

    def render(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                xpow = "X" if i == 1 else f"X^{i}"
                term = xpow if mag == 1 else f"{mag}*{xpow}"
            parts.append(sign + term)
        return "".join(parts)

    def __str__(self) -> str:
        return self.render()


def _from_rat(p: tuple[Fraction, ...]) -> IntPolynomial:
    """Clear denominators and return the primitive positive-leading int poly."""
    if not p:
        return IntPolynomial()
    den = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in p), 1)
    ints = [int(c * den) for c in p]
    g = reduce(gcd, (abs(c) for c in ints), 0)
    if ints[-1] < 0:
        g = -g
    return IntPolynomial(tuple(c // g for c in ints))


# ---------------------------------------------------------------------------
# squarefree structure
# ---------------------------------------------------------------------------


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """p / gcd(p, p'), primitive with positive leading coefficient."""
    if p.is_zero:
        raise ZeroPolynomial("squarefree part of the zero polynomial")
    if p.degree <= 0:
        return IntPolynomial((1,))
    pr = p._rat()
    g = _gcd_rat(pr, _deriv(pr))
    q, r = _divmod(pr, g)
    assert not r
    return _from_rat(q)


def squarefree_decomposition(p: IntPolynomial) -> list[tuple[int, IntPolynomial]]:
    """Yun decomposition: list of (multiplicity, factor), factors squarefree,
    pairwise coprime, primitive with positive leading coefficient; constant
    parts are dropped."""
    if p.is_zero:
        raise ZeroPolynomial("cannot decompose the zero polynomial")
    if p.degree <= 0:
        return []
    f = p._rat()
    g = _gcd_rat(f, _deriv(f))
    if _deg(g) == 0:
        return [(1, p.primitive_positive())]
    out: list[tuple[int, IntPolynomial]] = []
    w, _ = _divmod(f, g)
    y, _ = _divmod(_deriv(f), g)
    z = _sub(y, _deriv(w))
    i = 1
    while _deg(w) > 0:
        h = _gcd_rat(w, z)
        if _deg(h) > 0:
            out.append((i, _from_rat(h)))
        w, _ = _divmod(w, h)
        y, _ = _divmod(z, h)
        z = _sub(y, _deriv(w))
        i += 1
    return out


# ---------------------------------------------------------------------------
# Sturm chains and root counting
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SturmChain:
    """Remainder chain of a squarefree polynomial, rational coefficients."""

    polys: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def of(cls, squarefree: IntPolynomial) -> "SturmChain":
        p0 = squarefree._rat()
        chain = [p0]
        if _deg(p0) >= 1:
            chain.append(_deriv(p0))
            while _deg(chain[-1]) >= 1:
                rem = _divmod(chain[-2], chain[-1])[1]
                if not rem:
                    break
                chain.append(tuple(-c for c in rem))
        return cls(tuple(chain))

    def variations(self, x: Optional[Rational], positive_infinity: bool = False) -> int:
        """Sign variations at x; x=None means an infinite endpoint.

        Zero values are skipped, which gives half-open (a, b] counting when
        the chain is evaluated at a root of p0.
        """
        signs = []
        for p in self.polys:
            if not p:
                continue
            if x is None:
                lead = p[-1]
                s = (1 if lead > 0 else -1)
                if not positive_infinity and _deg(p) % 2 == 1:
                    s = -s
            else:
                v = _eval(p, x)
                if v == 0:
                    continue
                s = 1 if v > 0 else -1
            signs.append(s)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_chain(p: IntPolynomial) -> SturmChain:
    return SturmChain.of(squarefree_part(p))


def cauchy_bound(p: IntPolynomial) -> Fraction:
    """1 + max|a_i|/|a_deg|: strictly exceeds the modulus of every root."""
    if p.is_zero:
        raise ZeroPolynomial("no root bound for the zero polynomial")
    if p.degree == 0:
        return Fraction(1)
    top = abs(p.coeffs[-1])
    return 1 + Fraction(max(abs(c) for c in p.coeffs[:-1]), top)


def count_real_roots_in(
    p: IntPolynomial,
    lo: Optional[Rational],
    hi: Optional[Rational],
) -> int:
    """Number of distinct real roots of p in (lo, hi]; None means -/+infinity."""
    if p.is_zero:
        raise ZeroPolynomial("cannot count roots of the zero polynomial")
    if lo is not None and hi is not None and not lo < hi:
        raise ValueError("need lo < hi")
    chain = sturm_chain(p)
    v_lo = chain.variations(lo, positive_infinity=False)
    v_hi = chain.variations(hi, positive_infinity=True)
    return v_lo - v_hi


def has_positive_real_root(p: IntPolynomial) -> bool:
    """True iff p has at least one real root > 0.  Requires p(0) != 0."""
    if p.is_zero:
        raise ZeroPolynomial("predicate undefined for the zero polynomial")
    if p(0) == 0:
        raise ZeroAtOrigin("polynomial vanishes at 0")
    sf = squarefree_part(p)
    return count_real_roots_in(sf, 0, cauchy_bound(sf)) >= 1


def all_roots_real_positive(p: IntPolynomial) -> bool:
    """True iff every complex root of p (with multiplicity) is a positive real.

    Checked factor by factor on the squarefree decomposition: each factor
    must have as many distinct positive real roots as its degree.
    """
    if p.is_zero:
        raise ZeroPolynomial("predicate undefined for the zero polynomial")
    if p(0) == 0:
        raise ZeroAtOrigin("polynomial vanishes at 0")
    q = p.primitive_positive()
    for _mult, factor in squarefree_decomposition(q):
        bound = cauchy_bound(factor)
        if count_real_roots_in(factor, 0, bound) != factor.degree:
            return False
    return True


def divides(d: IntPolynomial, n: IntPolynomial) -> bool:
    """True iff n = q*d for some integer polynomial q.

    For polynomials with nonzero constant term this coincides with
    divisibility in the ring of integer Laurent polynomials.
    """
    if d.is_zero:
        raise ZeroPolynomial("division by the zero polynomial")
    if n.is_zero:
        return True
    q, r = _divmod(n._rat(), d._rat())
    return not r and all(c.denominator == 1 for c in q)


# ---------------------------------------------------------------------------
# text format: "2*X^2-3*X+2"
# ---------------------------------------------------------------------------

_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:"
    r"(?P<coeff>\d+)\s*(?:\*\s*(?P<xa>X)(?:\^(?P<expa>\d+))?)?"
    r"|(?P<xb>X)(?:\^(?P<expb>\d+))?"
    r")\s*"
)


def parse_polynomial(text: str) -> IntPolynomial:
    """Parse integer polynomials in X, e.g. '2*X^2-3*X+2' or 'X^3-1'."""
    pos = 0
    terms: dict[int, int] = {}
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad polynomial syntax at position {pos}: {text!r}")
        sign = m.group("sign")
        if sign is None and not first:
            raise ValueError(f"missing +/- between terms at position {pos}")
        s = -1 if sign == "-" else 1
        if m.group("coeff") is not None:
            c = int(m.group("coeff"))
            if m.group("xa"):
                e = int(m.group("expa")) if m.group("expa") else 1
            else:
                e = 0
        else:
            c = 1
            e = int(m.group("expb")) if m.group("expb") else 1
        terms[e] = terms.get(e, 0) + s * c
        pos = m.end()
        first = False
    if first:
        raise ValueError("empty polynomial text")
    deg = max(terms)
    return IntPolynomial(tuple(terms.get(i, 0) for i in range(deg + 1)))
