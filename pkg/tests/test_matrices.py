import random
from functools import reduce
from math import gcd

import pytest

from orderlab.errors import BadOrder, BadWeights
from orderlab.matrices import (
    IntMatrix,
    minors_gcd,
    prime_factorize,
    prime_witnesses,
    smith_normal_form,
    unit_smith_diagonal,
    weight_matrix,
    weight_matrix_with_corner,
)


class TestWeightMatrix:
    def test_single_row(self):
        assert weight_matrix((-2, 3, -2), 0).entries == ((-2, 3, -2),)

    def test_two_rows(self):
        assert weight_matrix((-2, 3, -2), 1).entries == (
            (-2, 3, -2, 0),
            (0, -2, 3, -2),
        )

    def test_banded_shape(self):
        m = weight_matrix((1, -3, 1), 2)
        assert m.rows == 3 and m.cols == 5
        assert m.entries[1] == (0, 1, -3, 1, 0)

    def test_zero_top_weight_rejected(self):
        with pytest.raises(BadWeights):
            weight_matrix((1, 0), 0)
        with pytest.raises(BadWeights):
            weight_matrix((3,), 0)


class TestWeightMatrixWithCorner:
    def test_single_row(self):
        assert weight_matrix_with_corner((-2, 3, -2), 0, 1).entries == ((-2, 3, -1),)

    def test_unchanged_when_corner_matches(self):
        assert weight_matrix_with_corner((-2, 3, -2), 1, 2).entries == (
            (-2, 3, -2, 0),
            (0, -2, 3, -2),
        )

    def test_other_row(self):
        assert weight_matrix_with_corner((1, 1, -4), 0, 2).entries == ((1, 1, -2),)


class TestSmithNormalForm:
    def test_identity(self):
        _d, diag = smith_normal_form(IntMatrix(((1, 0), (0, 1))))
        assert diag == (1, 1)

    def test_upper_triangular(self):
        _d, diag = smith_normal_form(IntMatrix(((2, 1), (0, 2))))
        assert diag == (1, 4)

    def test_band_case(self):
        _d, diag = smith_normal_form(weight_matrix((-2, 3, -2), 1))
        assert diag == (1, 1)

    def test_zero_matrix(self):
        _d, diag = smith_normal_form(IntMatrix(((0, 0), (0, 0))))
        assert diag == (0, 0)

    def test_rank_deficient(self):
        _d, diag = smith_normal_form(IntMatrix(((2, 4), (1, 2))))
        assert diag == (1, 0)


class TestMinorsGcd:
    def test_band(self):
        assert minors_gcd(weight_matrix((-2, 3, -2), 1), 2) == 1

    def test_two_by_two(self):
        assert minors_gcd(IntMatrix(((2, 4), (6, 8))), 2) == 8

    def test_order_one_is_entry_gcd(self):
        m = IntMatrix(((4, 6), (10, 14)))
        assert minors_gcd(m, 1) == 2

    def test_order_zero(self):
        assert minors_gcd(IntMatrix(((5,),)), 0) == 1

    def test_bad_order(self):
        with pytest.raises(BadOrder):
            minors_gcd(IntMatrix(((1, 2),)), 2)


class TestUnitSmithDiagonal:
    @pytest.mark.parametrize("j", [0, 1, 2, 3])
    def test_five_two_weights_all_j(self, j):
        assert unit_smith_diagonal((-2, 3, -2), j) is True

    def test_even_weights_fail(self):
        assert unit_smith_diagonal((-2, 4, -2), 0) is False

    def test_unit_entry_passes(self):
        assert unit_smith_diagonal((1, 0, -2), 0) is True


class TestPrimeWitnesses:
    def test_five_two(self):
        pw = prime_witnesses((-2, 3), 2)
        assert pw.ok and pw.witness == {2: 1}

    def test_two_primes(self):
        pw = prime_witnesses((2, 3), 6)
        assert pw.ok and pw.witness == {2: 1, 3: 0}

    def test_all_even_fails(self):
        pw = prime_witnesses((-2, 4), 2)
        assert not pw.ok and pw.missing == (2,)

    def test_m_one_vacuous(self):
        assert prime_witnesses((4, 6), 1).ok


class TestPrimeFactorize:
    @pytest.mark.parametrize(
        "n,expected",
        [(12, [(2, 2), (3, 1)]), (1, []), (97, [(97, 1)]), (360, [(2, 3), (3, 2), (5, 1)])],
    )
    def test_examples(self, n, expected):
        assert prime_factorize(n) == expected


def _random_matrix(rng, rows, cols, bound):
    return IntMatrix(
        tuple(tuple(rng.randint(-bound, bound) for _ in range(cols)) for _ in range(rows))
    )


class TestStructuralInvariants:
    def test_snf_diagonal_products_match_minor_gcds(self):
        rng = random.Random(11)
        for _ in range(60):
            m = _random_matrix(rng, 3, 5, 9)
            _d, diag = smith_normal_form(m)
            rank = sum(1 for v in diag if v)
            for k in range(1, rank + 1):
                prod = 1
                for v in diag[:k]:
                    prod *= v
                assert prod == minors_gcd(m, k), m.entries

    def test_corner_divisor_preserves_unit_diagonal(self):
        # when the corner divides m, a unit Smith diagonal survives the swap
        rng = random.Random(13)
        found = 0
        while found < 40:
            d = rng.randint(1, 3)
            a = [rng.randint(-5, 5) for _ in range(d)] + [-rng.randint(1, 6)]
            m = -a[-1]
            j = rng.randint(0, 4)
            try:
                base = weight_matrix(a, j)
            except BadWeights:
                continue
            if minors_gcd(base, j + 1) != 1:
                continue
            divisors = [aa for aa in range(1, m + 1) if m % aa == 0]
            for aa in divisors:
                mod = weight_matrix_with_corner(a, j, aa)
                assert minors_gcd(mod, j + 1) == 1, (a, j, aa)
            found += 1

    def test_prime_witnesses_imply_unit_diagonals(self):
        rng = random.Random(17)
        found = 0
        while found < 25:
            d = rng.randint(1, 4)
            a = [rng.randint(-6, 6) for _ in range(d)] + [-rng.randint(1, 6)]
            if prime_witnesses(a[:-1], -a[-1]).ok:
                for j in range(0, 6):
                    assert unit_smith_diagonal(a, j), (a, j)
                found += 1
