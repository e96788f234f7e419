"""Conjugate-power factorizations of zero-t-weight relators.

A relator w with zero t-exponent sum factors as a product of pieces
x^{m t^d} (meaning t^-d x^m t^d).  This module computes that factorization,
its degree spectrum and integer polynomial, the word-shape classification,
the eight-element orientation orbit, and the normal form
u(x_0,...,x_{d-1}) * x_d^{-m} that drives the strongest positive rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import DegreeZero, EmptyRelator, InDerivedSubgroup, NotInN, NotPrincipal
from .polynomials import IntPolynomial
from .words import Elementary, Word, exponent_sum, substitute


def _canonical(raw: list[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    stack: list[tuple[int, int]] = []
    for m, d in raw:
        if m == 0:
            continue
        if stack and stack[-1][1] == d:
            m += stack.pop()[0]
            if m == 0:
                continue
        stack.append((m, d))
    return tuple(stack)


@dataclass(frozen=True)
class FactorForm:
    """Canonical factor list: zero factors dropped, adjacent degrees distinct."""

    factors: tuple[tuple[int, int], ...]

    @classmethod
    def from_raw(cls, raw) -> "FactorForm":
        return cls(_canonical([(int(m), int(d)) for m, d in raw]))

    def word(self) -> Word:
        runs: list[tuple[str, int]] = []
        for m, d in self.factors:
            runs.extend((("t", -d), ("x", m), ("t", d)))
        return Word(tuple(runs))

    def inverse(self) -> "FactorForm":
        return FactorForm.from_raw([(-m, d) for m, d in reversed(self.factors)])

    def x_inverted(self) -> "FactorForm":
        return FactorForm.from_raw([(-m, d) for m, d in self.factors])

    def t_inverted(self) -> "FactorForm":
        return FactorForm.from_raw([(m, -d) for m, d in self.factors])

    def shifted(self, s: int) -> "FactorForm":
        return FactorForm.from_raw([(m, d + s) for m, d in self.factors])

    def render(self) -> str:
        parts = []
        for m, d in self.factors:
            if d == 0:
                parts.append(f"x^{{{m}}}" if m != 1 else "x")
            else:
                head = "x" if m == 1 else f"x^{m}"
                tail = "t" if d == 1 else f"t^{d}"
                parts.append(f"{head}^{{{tail}}}" if m == 1 else f"x^{{{m} {tail}}}")
        return " ".join(parts) if parts else "1"


def conjugate_factorization(w: Word) -> FactorForm:
    """Scan w with a running t-prefix sum; an x-run x^m after prefix p
    contributes the factor (m, -p).  Reconstructing and reducing the factor
    product recovers w exactly."""
    if w.is_identity:
        raise EmptyRelator("cannot factor the identity")
    if exponent_sum(w, "t") != 0:
        raise NotInN("t-exponent sum must vanish")
    prefix = 0
    raw: list[tuple[int, int]] = []
    for g, e in w.runs:
        if g == "t":
            prefix += e
        else:
            raw.append((e, -prefix))
    return FactorForm.from_raw(raw)


@dataclass(frozen=True)
class Spectrum:
    """Degree data: tau maps a degree to the factor indices at that degree,
    support holds the degrees with nonzero coefficient sum."""

    tau: dict[int, tuple[int, ...]]
    sums: dict[int, int]
    support: frozenset[int]
    e: Optional[int]
    d: Optional[int]
    in_derived: bool


def spectrum(ff: FactorForm) -> Spectrum:
    tau: dict[int, list[int]] = {}
    sums: dict[int, int] = {}
    for i, (m, d) in enumerate(ff.factors):
        tau.setdefault(d, []).append(i)
        sums[d] = sums.get(d, 0) + m
    support = frozenset(d for d, s in sums.items() if s != 0)
    if support:
        e, d = min(support), max(support)
        in_derived = False
    else:
        e = d = None
        in_derived = True
    return Spectrum(
        tau={k: tuple(v) for k, v in tau.items()},
        sums=sums,
        support=support,
        e=e,
        d=d,
        in_derived=in_derived,
    )


def alexander_poly(ff: FactorForm) -> IntPolynomial:
    """Sum of m_i X^{d_i - e}; integer polynomial with nonzero constant term."""
    sp = spectrum(ff)
    if sp.in_derived:
        raise InDerivedSubgroup("all degree sums vanish; polynomial undefined")
    coeffs = [0] * (sp.d - sp.e + 1)
    for deg, s in sp.sums.items():
        if s != 0:
            coeffs[deg - sp.e] = s
    return IntPolynomial(tuple(coeffs))


@dataclass(frozen=True)
class WordClass:
    in_n: bool
    in_derived: bool
    tidy: bool
    principal: bool
    monic: bool

    def to_dict(self) -> dict[str, bool]:
        return {
            "in_N": self.in_n,
            "in_derived": self.in_derived,
            "tidy": self.tidy,
            "principal": self.principal,
            "monic": self.monic,
        }


def classify(ff: FactorForm) -> WordClass:
    """Shape flags on the canonical factorization.  Degrees inside [e, d]
    whose coefficient sum vanishes do not spoil tidiness; stray factors
    outside [e, d] do."""
    sp = spectrum(ff)
    if sp.in_derived:
        return WordClass(True, True, False, False, False)
    degrees = [d for _m, d in ff.factors]
    tidy = min(degrees) >= sp.e and max(degrees) <= sp.d
    principal = tidy and len(sp.tau[sp.d]) == 1
    monic = principal and ff.factors[sp.tau[sp.d][0]][0] == 1
    return WordClass(True, False, tidy, principal, monic)


_ORBIT_FLAGS = [
    (False, False, False),
    (True, False, False),
    (False, True, False),
    (True, True, False),
    (False, False, True),
    (True, False, True),
    (False, True, True),
    (True, True, True),
]


def _orbit_tag(inv: bool, xinv: bool, tinv: bool) -> str:
    parts = []
    if inv:
        parts.append("inv")
    if xinv:
        parts.append("x-inv")
    if tinv:
        parts.append("t-inv")
    return ",".join(parts) if parts else "id"


def orientation_orbit(w: Word) -> list[tuple[Word, str]]:
    """The eight relators {w, w^-1} x {x -> x^-1} x {t -> t^-1}; all present
    the same group up to isomorphism, and the root predicates of the
    associated polynomial are constant across the orbit."""
    if exponent_sum(w, "t") != 0:
        raise NotInN("orbit defined for zero-t-weight relators")
    members = []
    for inv, xinv, tinv in _ORBIT_FLAGS:
        member = w.inverse() if inv else w
        bc = []
        if xinv:
            bc.append(Elementary("invert_x"))
        if tinv:
            bc.append(Elementary("invert_t"))
        if bc:
            member = substitute(member, bc)
        members.append((member, _orbit_tag(inv, xinv, tinv)))
    return members


@dataclass(frozen=True)
class HnnForm:
    """Data of the presentation w ~ u(x_0,...,x_{d-1}) * x_d^{-m}:
    the prefix word u (over conjugates x_k = x^{t^k}, encoded in x and t),
    the positive power m of the top conjugate, the span d, and the weight
    vector a with a_k the x_k-exponent sum and a_d = -m."""

    u: Word
    u_factors: tuple[tuple[int, int], ...]
    m: int
    d: int
    a: tuple[int, ...]
    orbit_tag: str
    shift: int
    rotation: int

    def u_symbols(self) -> str:
        parts = []
        for m, d in self.u_factors:
            parts.append(f"x_{d}" if m == 1 else f"x_{d}^{m}")
        return " ".join(parts)


def hnn_normal_form(w: Word) -> HnnForm:
    """Pick the first orbit member that is principal with top factor (-m, d),
    m > 0; shift degrees so they start at 0 and rotate the top factor to the
    end.  Requires span d >= 1."""
    any_principal = False
    for member, tag in orientation_orbit(w):
        ff = conjugate_factorization(member)
        sp = spectrum(ff)
        if sp.in_derived:
            continue
        cls = classify(ff)
        if not cls.principal:
            continue
        any_principal = True
        if sp.d - sp.e < 1:
            continue
        top_idx = sp.tau[sp.d][0]
        if ff.factors[top_idx][0] >= 0:
            continue
        shifted = ff.shifted(-sp.e)
        factors = list(shifted.factors)
        span = sp.d - sp.e
        idx = next(i for i, (_m, d) in enumerate(factors) if d == span)
        rotated = factors[idx + 1:] + factors[:idx + 1]
        top_m, _top_d = rotated[-1]
        m = -top_m
        u_ff = FactorForm.from_raw(rotated[:-1])
        u_factors = u_ff.factors
        sums: dict[int, int] = {}
        for fm, fd in u_factors:
            sums[fd] = sums.get(fd, 0) + fm
        a = tuple(sums.get(k, 0) for k in range(span)) + (-m,)
        assert a[0] != 0, "u must involve x_0"
        u_word = u_ff.word()
        return HnnForm(
            u=u_word,
            u_factors=u_factors,
            m=m,
            d=span,
            a=a,
            orbit_tag=tag,
            shift=-sp.e,
            rotation=idx + 1,
        )
    if any_principal:
        raise DegreeZero("every principal orbit member has degree span 0")
    raise NotPrincipal("no orientation-orbit member is principal")
