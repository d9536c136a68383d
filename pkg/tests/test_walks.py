import math

import pytest

from qhciz.characters import plancherel_expectation
from qhciz.combinat import Partition, partitions_of
from qhciz.hurwitz import simple_connected_count
from qhciz.walks import WalkSpec, count_simple_connected, count_walks


def ones(d):
    return Partition((1,) * d)


def test_spec_examples():
    assert count_walks(WalkSpec(2, ones(2), ones(2), (2,))) == 1
    assert count_walks(WalkSpec(3, ones(3), Partition((3,)), (1, 1))) == 6
    assert count_walks(WalkSpec(3, ones(3), Partition((3,)), (2,))) == 4


def test_walkspec_validation():
    with pytest.raises(ValueError):
        WalkSpec(3, Partition((2,)), Partition((3,)), (1,))
    with pytest.raises(ValueError):
        WalkSpec(3, ones(3), ones(3), (-1,))


def test_caps():
    with pytest.raises(ValueError):
        count_walks(WalkSpec(8, ones(8), ones(8), (0,)))
    with pytest.raises(ValueError):
        count_walks(WalkSpec(2, ones(2), ones(2), (9,)))
    # explicit override works
    assert count_walks(WalkSpec(2, ones(2), ones(2), (10,)), ignore_caps=True) == 1


def test_empty_walk():
    assert count_walks(WalkSpec(1, ones(1), ones(1), (0,))) == 1
    assert count_walks(WalkSpec(3, ones(3), Partition((3,)), (0, 0))) == 0


def test_jucys_murphy_identity_small():
    # walk counts equal Plancherel expectations of f_s f_{r-s}
    for d in range(1, 5):
        for alpha in partitions_of(d):
            for beta in partitions_of(d):
                for r in range(4):
                    for s in range(r + 1):
                        walks = count_walks(WalkSpec(d, alpha, beta, (s, r - s)))
                        expect = plancherel_expectation(d, alpha, beta, s, r)
                        assert walks == expect


def test_parity_vanishing():
    for d in range(2, 5):
        for alpha in partitions_of(d):
            for beta in partitions_of(d):
                for r in range(5):
                    if (r + alpha.length + beta.length) % 2 == 0:
                        continue
                    assert count_walks(WalkSpec(d, alpha, beta, (r,))) == 0


def test_leg_conventions_agree():
    for d in range(1, 5):
        for alpha in partitions_of(d):
            for beta in partitions_of(d):
                for r in range(4):
                    base = count_walks(WalkSpec(d, alpha, beta, (r,)))
                    assert count_walks(WalkSpec(d, alpha, beta, (r, 0))) == base
                    assert count_walks(WalkSpec(d, alpha, beta, (0, r))) == base


def test_reversal_symmetry():
    for d in range(1, 5):
        for alpha in partitions_of(d):
            for beta in partitions_of(d):
                for legs in [(1, 2), (2, 1), (3, 1)]:
                    fwd = count_walks(WalkSpec(d, alpha, beta, legs))
                    rev = count_walks(WalkSpec(d, beta, alpha, legs[::-1]))
                    assert fwd == rev


def test_connected_at_most_disconnected_and_full_cycle_equality():
    for d in range(1, 6):
        full_cycle = Partition((d,))
        for alpha in partitions_of(d):
            for r in range(4):
                for s in range(r + 1):
                    legs = (s, r - s)
                    for beta in partitions_of(d):
                        plain = count_walks(WalkSpec(d, alpha, beta, legs))
                        trans = count_walks(WalkSpec(d, alpha, beta, legs, True))
                        assert trans <= plain
                    # a full-cycle endpoint forces transitivity
                    plain = count_walks(WalkSpec(d, alpha, full_cycle, legs))
                    trans = count_walks(WalkSpec(d, alpha, full_cycle, legs, True))
                    assert trans == plain


def test_simple_connected_examples():
    assert count_simple_connected(1, 0) == 1
    assert count_simple_connected(2, 0) == 1
    assert count_simple_connected(3, 0) == 8


def test_simple_connected_matches_series_table():
    for d in range(1, 5):
        for g in (0, 1):
            if 2 * g - 2 + 2 * d > 8:
                continue
            count = count_simple_connected(d, g)
            coeff = simple_connected_count(d, g)
            assert coeff * math.factorial(d) == count
