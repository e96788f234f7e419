"""The decision engine.

analyze() normalizes a relator, computes its factorization data, and applies
the rule catalog:

  negative rules (obstructions to a bi-order)
    positive-root-necessity   tidy relator whose polynomial has no positive
                              real root, with the x-class certified nontrivial
    generalized-torsion-family  a verified certificate from a known family
    incompatible-powers       v^n (x^{t^d})^-m with coprime m, n >= 2

  positive rules (constructions of a bi-order)
    monic-real-positive       some orbit member monic, all roots positive real
    principal-real-positive   principal form with gcd / divisibility side
                              conditions, all roots positive real
    adjunction-tower          indivisibility + per-prime witnesses + the
                              sufficient abelian criterion, all roots positive

Both polarities firing at once raises InternalInconsistency.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Optional, Sequence, Union

from . import torsion
from .errors import (
    DegenerateRelator,
    DegreeZero,
    EmptyRelator,
    InternalInconsistency,
    NotPrincipal,
)
from .matrices import prime_witnesses, unit_smith_diagonal
from .polynomials import (
    IntPolynomial,
    all_roots_real_positive,
    divides,
    has_positive_real_root,
)
from .relators import (
    FactorForm,
    HnnForm,
    WordClass,
    alexander_poly,
    classify,
    conjugate_factorization,
    hnn_normal_form,
    orientation_orbit,
    spectrum,
)
from .words import T, Word, X, exponent_sum, parse_word, zero_t_weight

BI_ORDERABLE = "BiOrderable"
NOT_BI_ORDERABLE = "NotBiOrderable"
INCONCLUSIVE = "Inconclusive"
UNSUPPORTED = "Unsupported"

_KNOT_CITATIONS = {
    "positive-root-necessity": "Corollary 2.6(1)",
    "monic-real-positive": "Corollary 2.6(2)",
    "principal-real-positive": "Corollary 2.6(3)",
}


@dataclass(frozen=True)
class Justification:
    rule: str
    citation: str
    evidence: dict

    def to_json_dict(self) -> dict:
        return {"rule": self.rule, "citation": self.citation, "evidence": self.evidence}


@dataclass(frozen=True)
class ConditionReport:
    """Tri-state record of every checker that ran; None means not evaluated."""

    tidy: Optional[bool] = None
    principal: Optional[bool] = None
    monic: Optional[bool] = None
    has_positive_real_root: Optional[bool] = None
    all_roots_real_positive: Optional[bool] = None
    gcd_condition: Optional[bool] = None
    divisibility_condition: Optional[bool] = None
    prime_witnesses_ok: Optional[bool] = None
    u_indivisible: Optional[bool] = None
    snf_checked_up_to_j: Optional[int] = None

    def to_json_dict(self) -> dict:
        return {
            "tidy": self.tidy,
            "principal": self.principal,
            "monic": self.monic,
            "has_positive_real_root": self.has_positive_real_root,
            "all_roots_real_positive": self.all_roots_real_positive,
            "gcd_condition": self.gcd_condition,
            "divisibility_condition": self.divisibility_condition,
            "prime_witnesses_ok": self.prime_witnesses_ok,
            "u_indivisible": self.u_indivisible,
            "snf_checked_up_to_j": self.snf_checked_up_to_j,
        }


@dataclass(frozen=True)
class Verdict:
    outcome: str
    justifications: tuple[Justification, ...]
    polynomial: Optional[IntPolynomial]
    classification: Optional[WordClass]
    normalization: dict
    condition_report: ConditionReport
    knot: bool

    def to_json_dict(self) -> dict:
        return {
            "outcome": self.outcome,
            "polynomial": self.polynomial.render() if self.polynomial else None,
            "polynomial_coeffs": list(self.polynomial.coeffs) if self.polynomial else None,
            "classification": self.classification.to_dict() if self.classification else None,
            "normalization_trail": self.normalization,
            "justifications": [j.to_json_dict() for j in self.justifications],
            "condition_report": self.condition_report.to_json_dict(),
            "knot": self.knot,
        }


@dataclass(frozen=True)
class AnalyzeOptions:
    jmax: int = 16
    knot: bool = False
    gt_search: bool = False
    gt_max_factors: int = torsion.DEFAULT_MAX_FACTORS
    gt_max_conj: int = torsion.DEFAULT_MAX_CONJ_LEN
    gt_budget: Optional[int] = None
    gt_candidates: Optional[Sequence[Word]] = None


# ---------------------------------------------------------------------------
# condition fragments
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GcdDivisibilityFragment:
    gcd_condition: bool
    divisibility_condition: bool
    gcd_value: int
    remainder: int


def gcd_divisibility_conditions(a: Sequence[int], m: int) -> GcdDivisibilityFragment:
    """gcd(a_0..a_{d-1}) = 1 and m does not divide a_{d-1}."""
    a = tuple(int(v) for v in a)
    if not a or m < 1:
        raise ValueError("need d >= 1 weights and m >= 1")
    g = reduce(gcd, (abs(v) for v in a), 0)
    rem = a[-1] % m
    return GcdDivisibilityFragment(
        gcd_condition=g == 1,
        divisibility_condition=rem != 0,
        gcd_value=g,
        remainder=rem,
    )


@dataclass(frozen=True)
class ParafreeReport:
    u_indivisible: bool
    prime_witnesses_ok: bool
    witness: dict
    b_condition: str
    gcd_condition: bool
    divisibility_condition: bool
    snf_checked_up_to_j: Optional[int]


def parafree_conditions(hf: Optional[HnnForm], jmax: int = 16) -> ParafreeReport:
    """The checkable hypotheses of the adjunction-tower rule: indivisibility
    of u, a unit witness modulo every prime of m, and the sufficient
    abelianization criterion standing in for the conjugacy condition.  When
    the witnesses exist, the band matrices are additionally verified to have
    unit Smith diagonal for every index up to jmax."""
    if hf is None:
        raise NotPrincipal("no principal normal form available")
    from .words import is_proper_power

    u_indivisible = is_proper_power(hf.u) is None
    pw = prime_witnesses(hf.a[:-1], hf.m)
    frag = gcd_divisibility_conditions(hf.a[:-1], hf.m)
    passed = frag.gcd_condition and frag.divisibility_condition
    snf_checked: Optional[int] = None
    if pw.ok:
        for j in range(jmax + 1):
            if not unit_smith_diagonal(hf.a, j):
                raise InternalInconsistency(
                    f"prime witnesses hold but Smith diagonal is not all ones at j={j}"
                )
        snf_checked = jmax
    return ParafreeReport(
        u_indivisible=u_indivisible,
        prime_witnesses_ok=pw.ok,
        witness=dict(pw.witness),
        b_condition="sufficient-criterion-passed" if passed else "undetermined",
        gcd_condition=frag.gcd_condition,
        divisibility_condition=frag.divisibility_condition,
        snf_checked_up_to_j=snf_checked,
    )


# ---------------------------------------------------------------------------
# nontriviality certificates via the abelianized x-closure
# ---------------------------------------------------------------------------


def nontrivial_in_quotient(g: Word, relator_poly: IntPolynomial) -> bool:
    """Certify g != 1 in the one-relator quotient.

    Nonzero t-weight survives the retraction onto the t-axis.  Otherwise the
    abelianized normal closure of x is Z[X,X^-1] modulo the relator
    polynomial, so a class not divisible by it is nonzero."""
    if g.is_identity:
        return False
    if exponent_sum(g, "t") != 0:
        return True
    ff = conjugate_factorization(g)
    if spectrum(ff).in_derived:
        return False
    return not divides(relator_poly, alexander_poly(ff))


# ---------------------------------------------------------------------------
# the incompatible-powers pattern: v^n (x^{t^d})^-m, coprime m, n >= 2
# ---------------------------------------------------------------------------


def _match_power_pattern(w: Word) -> Optional[dict]:
    for member, tag in orientation_orbit(w):
        ff = conjugate_factorization(member)
        sp = spectrum(ff)
        if sp.in_derived or sp.d - sp.e < 1:
            continue
        shifted = ff.shifted(-sp.e)
        sums = spectrum(shifted).sums
        d = sp.d - sp.e
        coeffs = [sums.get(k, 0) for k in range(d + 1)]
        m = -coeffs[-1]
        if m < 2:
            continue
        low = coeffs[:-1]
        n = reduce(gcd, (abs(c) for c in low), 0)
        if n < 2 or gcd(m, n) != 1:
            continue
        b = [c // n for c in low]
        v = FactorForm.from_raw([(bj, j) for j, bj in enumerate(b) if bj]).word()
        candidate = v ** n * (X.conj(T ** d)) ** (-m)
        if candidate == shifted.word():
            return {
                "orbit_member": tag,
                "degree_shift": -sp.e,
                "m": m,
                "n": n,
                "f_coeffs": b,
                "d": d,
            }
    return None


# ---------------------------------------------------------------------------
# the engine
# ---------------------------------------------------------------------------


def _unsupported(reason: str, knot: bool, normalization: dict) -> Verdict:
    return Verdict(
        outcome=UNSUPPORTED,
        justifications=(Justification("unsupported", "", {"reason": reason}),),
        polynomial=None,
        classification=None,
        normalization=normalization,
        condition_report=ConditionReport(),
        knot=knot,
    )


def _cite(rule: str, default: str, knot: bool) -> str:
    if knot and rule in _KNOT_CITATIONS:
        return _KNOT_CITATIONS[rule]
    return default


def analyze(relator: Union[Word, str], options: AnalyzeOptions = AnalyzeOptions()) -> Verdict:
    if isinstance(relator, str):
        relator = parse_word(relator)
    knot = options.knot
    normalization: dict = {}
    if relator.is_identity:
        return _unsupported("relator freely reduces to the identity", knot, normalization)
    try:
        w, bc = zero_t_weight(relator)
    except DegenerateRelator as exc:
        return _unsupported(str(exc), knot, normalization)
    normalization = {
        "basis_change": [
            {"kind": el.kind, "k": el.k} if el.kind in ("x_to_xtk", "t_to_txk")
            else {"kind": el.kind}
            for el in bc
        ],
        "normalized_relator": w.render(),
    }
    gens = {g for g, _e in w.runs}
    if "x" not in gens or "t" not in gens:
        missing = "x" if "x" not in gens else "t"
        return _unsupported(
            f"normalized relator involves no {missing}; outside the supported setting",
            knot,
            normalization,
        )

    ff = conjugate_factorization(w)
    sp = spectrum(ff)
    normalization["factorization"] = [[m, d] for m, d in ff.factors]
    if sp.in_derived:
        return Verdict(
            outcome=INCONCLUSIVE,
            justifications=(
                Justification(
                    "polynomial-undefined",
                    "",
                    {"reason": "relator in N'", "detail": "all degree sums vanish"},
                ),
            ),
            polynomial=None,
            classification=classify(ff),
            normalization=normalization,
            condition_report=ConditionReport(),
            knot=knot,
        )

    poly = alexander_poly(ff)
    cls = classify(ff)
    orbit = orientation_orbit(w)
    orbit_classes = [(member, tag, classify(conjugate_factorization(member))) for member, tag in orbit]

    pos_root = has_positive_real_root(poly)
    all_pos = all_roots_real_positive(poly)
    x_class_nontrivial = not poly.is_unit_constant

    negatives: list[Justification] = []
    positives: list[Justification] = []

    # --- negative rules -----------------------------------------------------
    if cls.tidy and x_class_nontrivial and not pos_root:
        negatives.append(
            Justification(
                "positive-root-necessity",
                _cite("positive-root-necessity", "Theorem A", knot),
                {
                    "polynomial": poly.render(),
                    "distinct_positive_real_roots": 0,
                    "x_class_nontrivial": True,
                },
            )
        )

    families = torsion.family_certificates(w)
    for cert, citation in families:
        negatives.append(
            Justification(
                "generalized-torsion-family",
                citation,
                {
                    "certificate": cert.to_json_dict(),
                    "family": cert.family,
                    "g_nontrivial_certified": nontrivial_in_quotient(cert.g, poly),
                },
            )
        )

    power_match = _match_power_pattern(w)
    if power_match:
        negatives.append(
            Justification("incompatible-powers", "Example 2.2", power_match)
        )

    # --- positive rules ------------------------------------------------------
    monic_members = [tag for _m, tag, c in orbit_classes if c.monic]
    principal_any = any(c.principal for _m, _t, c in orbit_classes)
    try:
        hf: Optional[HnnForm] = hnn_normal_form(w)
    except (NotPrincipal, DegreeZero):
        hf = None

    d_fragment: Optional[GcdDivisibilityFragment] = None
    pf_report: Optional[ParafreeReport] = None
    if monic_members and all_pos:
        positives.append(
            Justification(
                "monic-real-positive",
                _cite("monic-real-positive", "Theorem C", knot),
                {
                    "monic_orbit_member": monic_members[0],
                    "polynomial": poly.render(),
                    "all_roots_real_positive": True,
                },
            )
        )
    else:
        if hf is not None:
            d_fragment = gcd_divisibility_conditions(hf.a[:-1], hf.m)
        if hf is not None and all_pos and d_fragment.gcd_condition and d_fragment.divisibility_condition:
            positives.append(
                Justification(
                    "principal-real-positive",
                    _cite("principal-real-positive", "Theorem D", knot),
                    {
                        "weights": list(hf.a),
                        "m": hf.m,
                        "orbit_member": hf.orbit_tag,
                        "gcd": d_fragment.gcd_value,
                        "top_weight_mod_m": d_fragment.remainder,
                    },
                )
            )
        elif hf is not None and all_pos:
            pf_report = parafree_conditions(hf, options.jmax)
            if (
                pf_report.u_indivisible
                and pf_report.prime_witnesses_ok
                and pf_report.b_condition == "sufficient-criterion-passed"
            ):
                positives.append(
                    Justification(
                        "adjunction-tower",
                        "Theorem 7.3 via Corollary 6.8",
                        {
                            "weights": list(hf.a),
                            "m": hf.m,
                            "u_indivisible": True,
                            "prime_witnesses": pf_report.witness,
                            "snf_checked_up_to_j": pf_report.snf_checked_up_to_j,
                        },
                    )
                )

    if negatives and positives:
        raise InternalInconsistency(
            f"both polarities derived for {w.render()}: "
            f"{[j.rule for j in negatives]} vs {[j.rule for j in positives]}"
        )

    report = ConditionReport(
        tidy=cls.tidy,
        principal=principal_any,
        monic=bool(monic_members),
        has_positive_real_root=pos_root,
        all_roots_real_positive=all_pos,
        gcd_condition=d_fragment.gcd_condition if d_fragment else None,
        divisibility_condition=d_fragment.divisibility_condition if d_fragment else None,
        prime_witnesses_ok=pf_report.prime_witnesses_ok if pf_report else None,
        u_indivisible=pf_report.u_indivisible if pf_report else None,
        snf_checked_up_to_j=pf_report.snf_checked_up_to_j if pf_report else None,
    )
    if hf is not None:
        normalization["orbit_member"] = hf.orbit_tag
        normalization["degree_shift"] = hf.shift
        normalization["rotation"] = hf.rotation

    if negatives:
        return Verdict(NOT_BI_ORDERABLE, tuple(negatives), poly, cls, normalization, report, knot)
    if positives:
        return Verdict(BI_ORDERABLE, tuple(positives), poly, cls, normalization, report, knot)

    extra: list[Justification] = []
    if options.gt_search:
        candidates = options.gt_candidates or torsion.DEFAULT_CANDIDATES
        cert = torsion.bounded_search(
            w,
            candidates,
            max_factors=options.gt_max_factors,
            max_conj_len=options.gt_max_conj,
            budget=options.gt_budget,
        )
        if cert is not None:
            certified = nontrivial_in_quotient(cert.g, poly)
            evidence = {
                "certificate": cert.to_json_dict(),
                "g_nontrivial_certified": certified,
            }
            if certified:
                extra.append(
                    Justification(
                        "search-certificate",
                        "generalized torsion element (bounded search)",
                        evidence,
                    )
                )
                return Verdict(
                    NOT_BI_ORDERABLE, tuple(extra), poly, cls, normalization, report, knot
                )
            extra.append(
                Justification(
                    "search-certificate-conditional",
                    "conditional on g != 1 in the quotient",
                    evidence,
                )
            )

    failing: dict[str, str] = {}
    if not cls.tidy:
        failing["positive-root-necessity"] = "relator is not tidy"
    elif not x_class_nontrivial:
        failing["positive-root-necessity"] = "x-class not certified nontrivial (unit polynomial)"
    else:
        failing["positive-root-necessity"] = "polynomial has a positive real root"
    failing["generalized-torsion-family"] = "no family pattern matched"
    failing["incompatible-powers"] = "pattern not matched"
    if not monic_members:
        failing["monic-real-positive"] = "no orientation-orbit member is monic"
    else:
        failing["monic-real-positive"] = "roots are not all real and positive"
    if hf is None:
        failing["principal-real-positive"] = (
            "no principal normal form" if not principal_any else "degree span is zero"
        )
    elif not all_pos:
        failing["principal-real-positive"] = "roots are not all real and positive"
    elif d_fragment and not d_fragment.gcd_condition:
        failing["principal-real-positive"] = "weights have a common factor"
    elif d_fragment and not d_fragment.divisibility_condition:
        failing["principal-real-positive"] = "m divides the top weight"
    if pf_report is not None:
        if not pf_report.u_indivisible:
            failing["adjunction-tower"] = "u is a proper power"
        elif not pf_report.prime_witnesses_ok:
            failing["adjunction-tower"] = "a prime of m divides every weight"
        elif pf_report.b_condition != "sufficient-criterion-passed":
            failing["adjunction-tower"] = "sufficient abelianization criterion undetermined"
    extra.append(Justification("inconclusive", "", {"failed_hypotheses": failing}))
    return Verdict(INCONCLUSIVE, tuple(extra), poly, cls, normalization, report, knot)
