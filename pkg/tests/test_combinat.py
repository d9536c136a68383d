import math

import pytest

from qhciz.combinat import Partition, class_size, fits_in_square, partitions_of, zee

PARTITION_NUMBERS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_empty_partition():
    assert partitions_of(0) == (Partition(),)
    assert Partition().size == 0
    assert Partition().length == 0


def test_partitions_of_three():
    assert [p.parts for p in partitions_of(3)] == [(3,), (2, 1), (1, 1, 1)]


def test_partitions_length_filter():
    assert [p.parts for p in partitions_of(3, max_length=2)] == [(3,), (2, 1)]


def test_partition_counts():
    for d, expected in enumerate(PARTITION_NUMBERS):
        assert len(partitions_of(d)) == expected


def test_descending_lex_order():
    for d in range(1, 9):
        parts = [p.parts for p in partitions_of(d)]
        assert parts == sorted(parts, reverse=True)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_contents_examples():
    assert sorted(Partition((2, 1)).contents()) == [-1, 0, 1]
    assert Partition((1,)).contents() == (0,)
    assert sorted(Partition((3,)).contents()) == [0, 1, 2]


def test_class_size_examples():
    assert class_size(Partition((1, 1))) == 1
    assert class_size(Partition((2,))) == 1
    assert class_size(Partition((3,))) == 2


def test_class_sizes_sum_to_group_order():
    for d in range(9):
        assert sum(class_size(a) for a in partitions_of(d)) == math.factorial(d)


def test_zee_times_class_size():
    for d in range(7):
        for a in partitions_of(d):
            assert zee(a) * class_size(a) == math.factorial(d)


def test_conjugation_involution_and_contents():
    for d in range(9):
        for lam in partitions_of(d):
            conj = lam.conjugate()
            assert conj.conjugate() == lam
            assert sorted(conj.contents()) == sorted(-c for c in lam.contents())


def test_hook_lengths_small():
    assert sorted(Partition((2, 1)).hook_lengths()) == [1, 1, 3]
    assert sorted(Partition((2, 2)).hook_lengths()) == [1, 2, 2, 3]


def test_fits_in_square():
    assert fits_in_square(Partition((2, 2)), 2)
    assert not fits_in_square(Partition((3,)), 2)
    assert fits_in_square(Partition(), 1)
