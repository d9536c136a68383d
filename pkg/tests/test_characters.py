import math
from fractions import Fraction

import pytest

from qhciz.characters import (
    central_character,
    character,
    dim_sym,
    plancherel_expectation,
)
from qhciz.combinat import Partition, class_size, partitions_of
from qhciz.symfun import content_poly, schur_principal


def test_trivial_representation():
    for d in range(1, 7):
        for alpha in partitions_of(d):
            assert character(Partition((d,)), alpha) == 1


def test_sign_representation():
    assert character(Partition((1, 1)), Partition((2,))) == -1
    for d in range(1, 7):
        sign_shape = Partition((1,) * d)
        for alpha in partitions_of(d):
            expected = (-1) ** (d - alpha.length)
            assert character(sign_shape, alpha) == expected


def test_character_examples():
    assert character(Partition((2, 1)), Partition((3,))) == -1
    assert character(Partition((2, 1)), Partition((1, 1, 1))) == 2


def test_character_size_mismatch():
    with pytest.raises(ValueError):
        character(Partition((2, 1)), Partition((2,)))


def test_dim_examples():
    assert dim_sym(Partition((5,))) == 1
    assert dim_sym(Partition((2, 1))) == 2
    assert dim_sym(Partition((2, 2))) == 2
    assert dim_sym(Partition()) == 1


def test_dim_matches_character_at_identity():
    for d in range(1, 8):
        ones = Partition((1,) * d)
        for lam in partitions_of(d):
            assert dim_sym(lam) == character(lam, ones)


def test_column_orthogonality():
    for d in range(1, 8):
        for alpha in partitions_of(d):
            for beta in partitions_of(d):
                total = sum(
                    character(lam, alpha) * character(lam, beta)
                    for lam in partitions_of(d)
                )
                expected = (
                    math.factorial(d) // class_size(alpha) if alpha == beta else 0
                )
                assert total == expected


def test_dimension_squares_sum_to_group_order():
    for d in range(1, 9):
        assert sum(dim_sym(lam) ** 2 for lam in partitions_of(d)) == math.factorial(d)


def test_central_character_examples():
    for d in range(1, 6):
        ones = Partition((1,) * d)
        for lam in partitions_of(d):
            assert central_character(ones, lam) == 1
    assert central_character(Partition((2,)), Partition((2,))) == 1
    assert central_character(Partition((3,)), Partition((2, 1))) == -1


def test_dimension_ratio_identity():
    # dim(lam) / dim_GL(lam, N) = d! / N^d * content_poly(lam, 1/N)^{-1}
    for d in range(1, 7):
        for n in range(1, 7):
            for lam in partitions_of(d, max_length=n):
                lhs = Fraction(dim_sym(lam), schur_principal(lam, n))
                rhs = Fraction(math.factorial(d), n**d) / content_poly(
                    lam, Fraction(1, n)
                )
                assert lhs == rhs


def test_plancherel_orthogonality_at_r_zero():
    for d in range(1, 7):
        for alpha in partitions_of(d):
            for beta in partitions_of(d):
                value = plancherel_expectation(d, alpha, beta, 0, 0)
                expected = class_size(alpha) if alpha == beta else 0
                assert value == expected


def test_plancherel_examples():
    ones = Partition((1, 1, 1))
    three = Partition((3,))
    assert plancherel_expectation(3, ones, three, 1, 2) == 6
    assert plancherel_expectation(3, ones, three, 0, 2) == 4


def test_plancherel_validation():
    with pytest.raises(ValueError):
        plancherel_expectation(3, Partition((2,)), Partition((3,)), 0, 0)
    with pytest.raises(ValueError):
        plancherel_expectation(2, Partition((2,)), Partition((2,)), 2, 1)


def test_plancherel_length_bound():
    # bounding the shape length changes the d > N sums
    alpha = Partition((1, 1, 1))
    stable = plancherel_expectation(3, alpha, alpha, 0, 2)
    bounded = plancherel_expectation(3, alpha, alpha, 0, 2, length_bound=1)
    assert stable != bounded
