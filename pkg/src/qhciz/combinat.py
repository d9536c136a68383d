"""Integer partitions, cycle types, and Young-diagram bookkeeping.

Partitions index everything downstream: conjugacy classes of the symmetric
group, irreducible characters, Schur polynomials, and the walk/Hurwitz
tables.  Cells of a diagram are indexed (row, column) starting at 1 in the
English convention, so the content of a cell is column - row.
"""

from __future__ import annotations

import math
from functools import lru_cache


class Partition:
    """A weakly decreasing tuple of positive integers.

    The empty partition is ``Partition()``.  Instances are hashable and
    meant to be treated as immutable values.
    """

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        if isinstance(parts, Partition):
            parts = parts.parts
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive: {parts!r}")
            if i > 0 and parts[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing: {parts!r}")
        self.parts = parts

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram."""
        if not self.parts:
            return Partition()
        return Partition(
            tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0]))
        )

    def contents(self) -> tuple[int, ...]:
        """Multiset of cell contents column - row, in row-major cell order."""
        return tuple(j - i for i, p in enumerate(self.parts) for j in range(p))

    def hook_lengths(self) -> tuple[int, ...]:
        """Multiset of hook lengths, in row-major cell order."""
        conj = self.conjugate().parts
        return tuple(
            (p - j - 1) + (conj[j] - i - 1) + 1
            for i, p in enumerate(self.parts)
            for j in range(p)
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"


@lru_cache(maxsize=None)
def partitions_of(d: int, max_length: int | None = None) -> tuple[Partition, ...]:
    """All partitions of d with at most max_length parts, descending lex order.

    The order is fixed (e.g. (3), (2,1), (1,1,1)) so that every table and
    JSON output built on top of it is byte-stable.
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    slots = d if max_length is None else max_length
    out = [Partition(parts) for parts in _partition_tuples(d, d, slots)]
    return tuple(out)


def _partition_tuples(remaining, max_part, slots):
    if remaining == 0:
        yield ()
        return
    if slots == 0 or max_part == 0:
        return
    for first in range(min(max_part, remaining), 0, -1):
        for rest in _partition_tuples(remaining - first, first, slots - 1):
            yield (first,) + rest


def zee(alpha: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type alpha."""
    alpha = Partition(alpha)
    z = 1
    mult: dict[int, int] = {}
    for k in alpha.parts:
        mult[k] = mult.get(k, 0) + 1
    for k, m in mult.items():
        z *= k**m * math.factorial(m)
    return z


def class_size(alpha: Partition) -> int:
    """Number of permutations of S(d) with cycle type alpha, d = |alpha|."""
    alpha = Partition(alpha)
    return math.factorial(alpha.size) // zee(alpha)


def fits_in_square(lam: Partition, n: int) -> bool:
    """True iff the diagram of lam is contained in the n x n square."""
    lam = Partition(lam)
    return lam.length <= n and (not lam.parts or lam.parts[0] <= n)
