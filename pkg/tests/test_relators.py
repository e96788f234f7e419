import random

import pytest

from orderlab.errors import (
    DegreeZero,
    EmptyRelator,
    InDerivedSubgroup,
    NotInN,
    NotPrincipal,
)
from orderlab.polynomials import IntPolynomial
from orderlab.relators import (
    FactorForm,
    alexander_poly,
    classify,
    conjugate_factorization,
    hnn_normal_form,
    orientation_orbit,
    spectrum,
)
from orderlab.words import T, Word, X, identity, parse_word


def ff(text: str) -> FactorForm:
    return conjugate_factorization(parse_word(text))


def random_factor_word(rng, max_factors=5, m_bound=3, d_bound=4):
    raw = [
        (rng.randint(-m_bound, m_bound), rng.randint(-d_bound, d_bound))
        for _ in range(rng.randint(1, max_factors))
    ]
    return FactorForm.from_raw(raw).word(), raw


class TestConjugateFactorization:
    def test_commutator(self):
        assert ff("k(x,t)").factors == ((-1, 0), (1, 1))

    def test_five_two(self):
        assert ff("c(x^-3,t) x^2 c(x^2,t^2)").factors == ((-3, 1), (2, 0), (2, 2))

    def test_shifted_difference(self):
        assert ff("c(x,t^3) x^-1").factors == ((1, 3), (-1, 0))

    def test_errors(self):
        with pytest.raises(EmptyRelator):
            conjugate_factorization(identity())
        with pytest.raises(NotInN):
            conjugate_factorization(parse_word("x t"))

    def test_round_trip_examples(self):
        for text in ["k(x,t)", "c(x^-3,t) x^2 c(x^2,t^2)", "x^3 c(x^-2,t)"]:
            w = parse_word(text)
            assert conjugate_factorization(w).word() == w

    def test_round_trip_random(self):
        rng = random.Random(100)
        for _ in range(300):
            w, raw = random_factor_word(rng)
            if w.is_identity:
                continue
            form = conjugate_factorization(w)
            assert form.word() == w
            assert form.factors == FactorForm.from_raw(raw).factors


class TestSpectrum:
    def test_five_two(self):
        sp = spectrum(ff("c(x^-3,t) x^2 c(x^2,t^2)"))
        assert sp.support == {0, 1, 2} and (sp.e, sp.d) == (0, 2)

    @pytest.mark.parametrize("m,n", [(1, 2), (2, 1), (3, 4)])
    def test_commutator_powers(self, m, n):
        sp = spectrum(ff(f"k(x^{m},t^{n})"))
        assert sp.support == {0, n} and (sp.e, sp.d) == (0, n)

    def test_cancelling_degree_outside_support(self):
        # t x t^-1 x t x^-1 t^-1: degree -1 occupied but sums to zero
        form = ff("t x t^-1 x t x^-1 t^-1")
        sp = spectrum(form)
        assert form.factors == ((1, -1), (1, 0), (-1, -1))
        assert -1 in sp.tau and -1 not in sp.support
        assert (sp.e, sp.d) == (0, 0)

    def test_derived_subgroup_detection(self):
        sp = spectrum(ff("k(x,c(x,t))"))
        assert sp.in_derived


class TestAlexanderPoly:
    def test_five_two(self):
        assert alexander_poly(ff("c(x^-3,t) x^2 c(x^2,t^2)")) == IntPolynomial((2, -3, 2))

    @pytest.mark.parametrize("m,n", [(2, 3), (1, 4), (-2, 5), (3, -1)])
    def test_quadratic_family(self, m, n):
        # (x^t x^m)^t (x^t x^m)^n has polynomial (X+m)(X+n)
        a = f"(c(x,t) x^{m})"
        w = parse_word(f"c({a},t) {a}^{n}")
        assert alexander_poly(conjugate_factorization(w)) == IntPolynomial(
            (m * n, m + n, 1)
        )

    @pytest.mark.parametrize("n,m", [(3, 2), (2, 5), (4, 1)])
    def test_power_family(self, n, m):
        w = parse_word(f"x^{n} c(x^-{m},t)")
        assert alexander_poly(conjugate_factorization(w)) == IntPolynomial((n, -m))

    def test_derived_rejected(self):
        with pytest.raises(InDerivedSubgroup):
            alexander_poly(ff("k(x,c(x,t))"))

    def test_value_at_one_is_x_weight(self):
        rng = random.Random(5)
        from orderlab.words import exponent_sum

        for _ in range(200):
            w, _raw = random_factor_word(rng)
            if w.is_identity:
                continue
            form = conjugate_factorization(w)
            if spectrum(form).in_derived:
                continue
            assert alexander_poly(form)(1) == exponent_sum(w, "x")

    def test_conjugation_invariance(self):
        w = parse_word("c(x^-3,t) x^2 c(x^2,t^2)")
        base = alexander_poly(conjugate_factorization(w))
        for k in range(-5, 6):
            assert alexander_poly(conjugate_factorization(w.conj(T ** k))) == base

    def test_inverse_negates_and_t_inversion_reverses(self):
        rng = random.Random(6)
        for _ in range(150):
            w, _raw = random_factor_word(rng)
            if w.is_identity:
                continue
            form = conjugate_factorization(w)
            if spectrum(form).in_derived:
                continue
            p = alexander_poly(form)
            assert alexander_poly(form.inverse()) == -p
            assert alexander_poly(form.t_inverted()) == p.reversed()


class TestClassify:
    def test_five_two(self):
        cls = classify(ff("c(x^-3,t) x^2 c(x^2,t^2)"))
        assert cls.tidy and cls.principal and not cls.monic

    def test_monic(self):
        cls = classify(ff("x c(x^-3,t) c(x,t^2)"))
        assert cls.monic

    def test_not_tidy(self):
        cls = classify(ff("t x t^-1 x t x^-1 t^-1"))
        assert not cls.tidy and not cls.principal

    def test_flag_implications_random(self):
        rng = random.Random(8)
        for _ in range(300):
            w, _raw = random_factor_word(rng)
            if w.is_identity:
                continue
            cls = classify(conjugate_factorization(w))
            if cls.monic:
                assert cls.principal
            if cls.principal:
                assert cls.tidy
            if cls.tidy:
                assert cls.in_n and not cls.in_derived


class TestOrientationOrbit:
    def test_size_and_identity_member(self):
        w = parse_word("c(x^-3,t) x^2 c(x^2,t^2)")
        orbit = orientation_orbit(w)
        assert len(orbit) == 8
        assert orbit[0] == (w, "id")

    def test_inverse_member_factors(self):
        w = parse_word("c(x^-3,t) x^2 c(x^2,t^2)")
        member, tag = orientation_orbit(w)[1]
        assert tag == "inv"
        assert conjugate_factorization(member).factors == ((-2, 2), (-2, 0), (3, 1))

    def test_members_define_same_polynomial_up_to_sign_and_reversal(self):
        w = parse_word("c(x^-3,t) x^2 c(x^2,t^2)")
        base = alexander_poly(conjugate_factorization(w))
        variants = {
            base.coeffs,
            (-base).coeffs,
            base.reversed().coeffs,
            (-base.reversed()).coeffs,
        }
        for member, _tag in orientation_orbit(w):
            p = alexander_poly(conjugate_factorization(member))
            assert p.coeffs in variants

    def test_requires_zero_t_weight(self):
        with pytest.raises(NotInN):
            orientation_orbit(parse_word("t x"))


class TestHnnNormalForm:
    def test_five_two(self):
        hf = hnn_normal_form(parse_word("c(x^-3,t) x^2 c(x^2,t^2)"))
        assert (hf.m, hf.d) == (2, 2)
        assert hf.a == (-2, 3, -2)
        assert hf.orbit_tag == "inv"

    def test_monic_cubic_shape(self):
        hf = hnn_normal_form(parse_word("x c(x^-3,t) c(x,t^2)"))
        assert (hf.m, hf.d) == (1, 2)
        assert hf.a == (-1, 3, -1)

    def test_oriented_input(self):
        hf = hnn_normal_form(parse_word("x^-2 c(x^5,t) c(x^-2,t^2)"))
        assert (hf.m, hf.d) == (2, 2)
        assert hf.a == (-2, 5, -2)
        assert hf.orbit_tag == "id"

    def test_reconstruction_is_orbit_member(self):
        # u * x_d^-m, shifted back, is a cyclic permutation of an orbit member
        from orderlab.words import cyclic_reduce

        w = parse_word("c(x^-3,t) x^2 c(x^2,t^2)")
        hf = hnn_normal_form(w)
        rebuilt = (hf.u * (X.conj(T ** hf.d)) ** (-hf.m)).conj(T ** hf.shift)
        rebuilt_core = cyclic_reduce(rebuilt)[0]
        cores = {cyclic_reduce(m)[0] for m, _t in orientation_orbit(w)}

        def rotations(word):
            letters = list(word.letters())
            for i in range(max(1, len(letters))):
                yield Word(tuple(letters[i:] + letters[:i]))

        assert any(rot in cores for rot in rotations(rebuilt_core))

    def test_weights_match_polynomial_coefficients(self):
        # the weight vector is the coefficient list of the chosen member's
        # polynomial, shifted to start at degree zero
        rng = random.Random(9)
        count = 0
        while count < 80:
            w, _raw = random_factor_word(rng)
            if w.is_identity:
                continue
            try:
                hf = hnn_normal_form(w)
            except (NotPrincipal, DegreeZero):
                continue
            member = dict((t, m) for m, t in orientation_orbit(w))[hf.orbit_tag]
            p = alexander_poly(conjugate_factorization(member))
            assert p.coeffs == hf.a
            count += 1

    def test_not_principal(self):
        # x x^t x x^-t: top degree occupied twice for every orientation
        w = parse_word("x c(x,t) x c(x^-1,t)")
        factors = conjugate_factorization(w).factors
        assert factors == ((1, 0), (1, 1), (1, 0), (-1, 1))
        with pytest.raises(NotPrincipal):
            hnn_normal_form(w)

    def test_degree_zero(self):
        with pytest.raises(DegreeZero):
            hnn_normal_form(parse_word("c(x^2,t)"))
