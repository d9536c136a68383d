import math
from fractions import Fraction

import pytest

from qhciz.characters import central_character, dim_sym
from qhciz.combinat import Partition, partitions_of
from qhciz.symfun import (
    complete_homogeneous_eval,
    content_h,
    content_poly,
    power_sum_eval,
    schur_eval,
    schur_principal,
)


def _rand_complex(rng, n):
    return tuple(complex(a, b) for a, b in zip(rng.uniform(-1, 1, n), rng.uniform(-1, 1, n)))


def test_power_sum_examples():
    assert power_sum_eval(Partition(), (2.0, 3.0)) == 1
    assert power_sum_eval(Partition((1,)), (1,) * 5) == 5
    assert power_sum_eval(Partition((2, 1)), (1, 2)) == 15


def test_complete_homogeneous_examples():
    assert complete_homogeneous_eval(0, (9.0,)) == 1
    assert complete_homogeneous_eval(2, (0, 1, 2)) == 7
    assert complete_homogeneous_eval(1, (1, 1)) == 2


def test_schur_examples():
    import numpy as np

    rng = np.random.default_rng(5)
    x = _rand_complex(rng, 4)
    assert abs(schur_eval(Partition((1,)), x) - sum(x)) < 1e-12
    assert schur_eval(Partition((2,)), (1, 1)) == 3
    assert schur_eval(Partition((1, 1)), (1, 0)) == 0
    assert schur_eval(Partition(), x) == 1


def test_schur_too_many_rows_is_zero():
    assert schur_eval(Partition((1, 1, 1)), (1.0, 2.0)) == 0


def test_schur_stability_under_zero_padding():
    import numpy as np

    rng = np.random.default_rng(7)
    for d in range(1, 7):
        for lam in partitions_of(d):
            x = _rand_complex(rng, 3)
            v1 = schur_eval(lam, x)
            v2 = schur_eval(lam, x + (0.0, 0.0))
            assert abs(v1 - v2) <= 1e-10 * max(1.0, abs(v1))


def test_frobenius_relation_against_characters():
    import numpy as np

    rng = np.random.default_rng(11)
    for d in range(1, 6):
        x = _rand_complex(rng, min(4, d + 1))
        for lam in partitions_of(d):
            direct = schur_eval(lam, x)
            total = 0j
            for alpha in partitions_of(d):
                total += float(central_character(alpha, lam)) * power_sum_eval(alpha, x)
            total *= dim_sym(lam) / math.factorial(d)
            assert abs(direct - total) <= 1e-10 * max(1.0, abs(direct))


def test_schur_principal_examples():
    for n in (1, 2, 5):
        assert schur_principal(Partition((1,)), n) == n
    assert schur_principal(Partition((2,)), 2) == 3
    assert schur_principal(Partition((2, 1)), 2) == 2
    assert schur_principal(Partition((2, 1)), 1) == 0


def test_schur_principal_matches_schur_eval_at_ones():
    for d in range(1, 6):
        for lam in partitions_of(d):
            for n in range(1, 5):
                exact = schur_principal(lam, n)
                numeric = schur_eval(lam, (1.0,) * n)
                assert abs(numeric - exact) < 1e-9


def test_content_poly_examples():
    for n in (2, 3, 7):
        assert content_poly(Partition((2, 1)), Fraction(1, n)) == 1 - Fraction(1, n**2)
    assert content_poly(Partition((1,)), Fraction(3, 4)) == 1
    assert content_poly(Partition((2,)), Fraction(1, 2)) == Fraction(3, 2)


def test_content_poly_recomputed_from_contents():
    for d in range(9):
        for lam in partitions_of(d):
            for n in (3, 5):
                factors = [1 + Fraction(c, n) for c in lam.contents()]
                if any(f == 0 for f in factors):
                    with pytest.raises(ValueError):
                        content_poly(lam, Fraction(1, n))
                    continue
                expected = Fraction(1)
                for f in factors:
                    expected *= f
                assert content_poly(lam, Fraction(1, n)) == expected


def test_content_poly_flags_zero_factor():
    # cell (2,1) of (1,1) has content -1, so hbar = 1 kills a factor
    with pytest.raises(ValueError):
        content_poly(Partition((1, 1)), Fraction(1))


def test_content_h_examples():
    assert content_h(1, Partition((3,))) == 3
    assert content_h(2, Partition((3,))) == 7
    assert content_h(2, Partition((2, 1))) == 1
    assert content_h(0, Partition((2, 1))) == 1


def test_inverse_content_poly_expansion_converges_geometrically():
    # 1/Omega_hbar = sum_r (-hbar)^r f_r with a geometric tail
    for n in (2, 3, 4):
        hbar = Fraction(1, n)
        for d in range(1, n + 1):
            for lam in partitions_of(d):
                target = 1 / content_poly(lam, hbar)
                residuals = []
                acc = Fraction(0)
                for r in range(25):
                    acc += (-hbar) ** r * content_h(r, lam)
                    residuals.append(abs(target - acc))
                # tail contracts at least like ((d-1)/n)^R <= (3/4)^R
                assert residuals[12] <= residuals[0] * Fraction(1, 3) or residuals[0] == 0
                assert residuals[24] <= residuals[12] * Fraction(1, 3)
                assert residuals[24] < Fraction(1, 10)
