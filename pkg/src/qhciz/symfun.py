"""Evaluation of power sums, complete homogeneous and Schur polynomials.

Two scalar backends sit behind one interface: exact rationals (for int or
Fraction inputs) and complex floats (for analytic evaluation).  Schur values
go through the Jacobi-Trudi determinant in the h-basis rather than the
bialternant ratio, so coincident arguments such as the all-ones point are
unproblematic.  Principal specializations use the exact hook-content
formula.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .combinat import Partition


def _is_exact(values) -> bool:
    return all(isinstance(v, (int, Fraction)) for v in values)


def power_sum_eval(alpha: Partition, x) -> complex | Fraction:
    """Newton power sum p_alpha(x) = prod_i sum_j x_j^alpha_i; empty alpha gives 1."""
    alpha = Partition(alpha)
    x = tuple(x)
    one = Fraction(1) if _is_exact(x) else complex(1)
    out = one
    for k in alpha.parts:
        out *= sum((v**k for v in x), start=0 * one)
    return out


def _homogeneous_list(rmax: int, x) -> list:
    """h_0 .. h_rmax of x via Newton's identities."""
    x = tuple(x)
    if _is_exact(x):
        one = Fraction(1)
        p = [sum((Fraction(v) ** k for v in x), start=Fraction(0)) for k in range(rmax + 1)]
    else:
        one = complex(1)
        p = [sum((complex(v) ** k for v in x), start=0j) for k in range(rmax + 1)]
    h = [one]
    for m in range(1, rmax + 1):
        acc = 0 * one
        for i in range(1, m + 1):
            acc += p[i] * h[m - i]
        h.append(acc / m)
    return h


def complete_homogeneous_eval(r: int, x) -> complex | Fraction:
    """Complete homogeneous symmetric polynomial h_r(x); h_0 = 1."""
    if r < 0:
        raise ValueError("degree must be nonnegative")
    return _homogeneous_list(r, x)[r]


def _det(rows):
    """Determinant by Gaussian elimination; exact for Fraction entries."""
    n = len(rows)
    a = [list(row) for row in rows]
    exact = _is_exact([v for row in a for v in row])
    if exact:
        a = [[Fraction(v) for v in row] for row in a]
    det = Fraction(1) if exact else complex(1)
    for col in range(n):
        pivot = None
        if exact:
            for i in range(col, n):
                if a[i][col] != 0:
                    pivot = i
                    break
        else:
            pivot = max(range(col, n), key=lambda i: abs(a[i][col]))
            if abs(a[pivot][col]) == 0:
                pivot = None
        if pivot is None:
            return 0 * det
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col] if not exact else Fraction(1) / a[col][col]
        for i in range(col + 1, n):
            if a[i][col] == 0:
                continue
            factor = a[i][col] * inv
            for j in range(col, n):
                a[i][j] -= factor * a[col][j]
    return det


def schur_eval(lam: Partition, x) -> complex | Fraction:
    """Schur polynomial s_lam(x) by the Jacobi-Trudi determinant det[h_{lam_i-i+j}].

    Returns 0 when lam has more rows than x has entries (stability).
    """
    lam = Partition(lam)
    x = tuple(x)
    exact = _is_exact(x)
    zero = Fraction(0) if exact else complex(0)
    if lam.length > len(x):
        return zero
    if not lam.parts:
        return zero + 1
    n = lam.length
    h = _homogeneous_list(lam.parts[0] + n - 1, x)

    def entry(i, j):
        k = lam.parts[i] - (i + 1) + (j + 1)
        return h[k] if k >= 0 else zero

    rows = [[entry(i, j) for j in range(n)] for i in range(n)]
    return _det(rows)


@lru_cache(maxsize=None)
def _principal(parts: tuple[int, ...], n: int) -> int:
    lam = Partition(parts)
    num = 1
    den = 1
    for c, hook in zip(lam.contents(), lam.hook_lengths()):
        num *= n + c
        den *= hook
    value = Fraction(num, den)
    assert value.denominator == 1
    return int(value)


def schur_principal(lam: Partition, n: int) -> int:
    """dim of the GL(n) irreducible labeled lam: s_lam(1^n), exact hook-content.

    Zero when lam has more than n rows.
    """
    lam = Partition(lam)
    if lam.length > n:
        return 0
    return _principal(lam.parts, n)


def content_poly(lam: Partition, hbar: Fraction) -> Fraction:
    """Content polynomial prod over cells of (1 + hbar*c(cell)), exact.

    Raises ValueError when some factor vanishes, so callers that need the
    inverse specialization can reject it instead of dividing by zero.
    """
    lam = Partition(lam)
    hbar = Fraction(hbar)
    out = Fraction(1)
    for c in lam.contents():
        factor = 1 + hbar * c
        if factor == 0:
            raise ValueError(
                f"content polynomial factor 1 + {hbar}*{c} vanishes on {lam!r}"
            )
        out *= factor
    return out


@lru_cache(maxsize=None)
def _content_h(parts: tuple[int, ...], r: int) -> Fraction:
    if r == 0:
        return Fraction(1)
    contents = Partition(parts).contents()
    # Newton's identity m*h_m = sum_i p_i h_{m-i} on the content multiset.
    acc = Fraction(0)
    for i in range(1, r + 1):
        p_i = sum(c**i for c in contents)
        acc += p_i * _content_h(parts, r - i)
    return acc / r


def content_h(r: int, lam: Partition) -> Fraction:
    """h_r specialized on the multiset of contents of lam; h_0 = 1."""
    if r < 0:
        raise ValueError("degree must be nonnegative")
    return _content_h(Partition(lam).parts, r)
