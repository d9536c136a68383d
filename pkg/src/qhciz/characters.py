"""Symmetric-group characters, dimensions, and Plancherel expectations.

Characters are computed by the Murnaghan-Nakayama recursion on beta-sets
(first-column hook lengths), removing the longest part of the cycle type
first, with a global memo table keyed on (shape, cycle type).  The memo is
only ever extended with pure values, so concurrent readers are safe under
the usual CPython dict guarantees.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .combinat import Partition, class_size, partitions_of
from .symfun import content_h

_char_memo: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}


def _mn(lam: tuple[int, ...], alpha: tuple[int, ...]) -> int:
    if not alpha:
        return 1
    key = (lam, alpha)
    cached = _char_memo.get(key)
    if cached is not None:
        return cached
    k = alpha[0]
    rest = alpha[1:]
    n = len(lam)
    beta = [lam[i] + n - 1 - i for i in range(n)]  # strictly decreasing
    betaset = set(beta)
    total = 0
    for b in beta:
        c = b - k
        if c < 0 or c in betaset:
            continue
        height = sum(1 for v in beta if c < v < b)
        newbeta = sorted((v for v in beta if v != b), reverse=True)
        newbeta.append(c)
        newbeta.sort(reverse=True)
        mu = tuple(v - (n - 1 - i) for i, v in enumerate(newbeta))
        mu = tuple(p for p in mu if p > 0)
        total += (-1) ** height * _mn(mu, rest)
    _char_memo[key] = total
    return total


def character(lam: Partition, alpha: Partition) -> int:
    """Irreducible character chi^lam evaluated on the class of cycle type alpha."""
    lam = Partition(lam)
    alpha = Partition(alpha)
    if lam.size != alpha.size:
        raise ValueError(f"size mismatch: |{lam!r}| != |{alpha!r}|")
    return _mn(lam.parts, alpha.parts)


def dim_sym(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam (hook length formula)."""
    lam = Partition(lam)
    den = 1
    for h in lam.hook_lengths():
        den *= h
    return math.factorial(lam.size) // den


def central_character(alpha: Partition, lam: Partition) -> Fraction:
    """Eigenvalue of the class sum C_alpha on the irreducible module of shape lam.

    Equals |C_alpha| * chi^lam(alpha) / dim(lam).
    """
    alpha = Partition(alpha)
    lam = Partition(lam)
    if lam.size != alpha.size:
        raise ValueError(f"size mismatch: |{alpha!r}| != |{lam!r}|")
    return Fraction(class_size(alpha) * character(lam, alpha), dim_sym(lam))


def plancherel_expectation(
    d: int,
    alpha: Partition,
    beta: Partition,
    s: int,
    r: int,
    length_bound: int | None = None,
) -> Fraction:
    """Plancherel average of omega_alpha * f_s * f_{r-s} * omega_beta over shapes of d.

    f_r is the complete homogeneous polynomial of degree r specialized on the
    contents of the shape.  With no length bound this is the stable value; a
    bound ell(lam) <= length_bound gives the finite-N string-coefficient sum.
    """
    alpha = Partition(alpha)
    beta = Partition(beta)
    if alpha.size != d or beta.size != d:
        raise ValueError("alpha and beta must be partitions of d")
    if not 0 <= s <= r:
        raise ValueError("need 0 <= s <= r")
    total = Fraction(0)
    for lam in partitions_of(d, max_length=length_bound):
        dim = dim_sym(lam)
        term = Fraction(dim * dim)
        term *= central_character(alpha, lam)
        term *= content_h(s, lam) * content_h(r - s, lam)
        term *= central_character(beta, lam)
        total += term
    return total / math.factorial(d)
