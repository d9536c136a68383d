"""Finite-N evaluators: character and string expansions, truncation bounds,
genus free energies, and concentration ratios.

Everything here is a partial sum of an entire function of (a, b, z); callers
control the z-degree cutoff, and evaluators report the magnitude of the last
increment as a tail indicator.  The default cutoff makes the a-priori term
bound |z|^d N^{2d} / d! smaller than 1e-12.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .combinat import Partition, fits_in_square, partitions_of
from .characters import central_character, dim_sym
from .hurwitz import HurwitzRecord, connected_table, ones_free_energy_table
from .symfun import content_poly, power_sum_eval, schur_eval, schur_principal

TAIL_TOL = 1e-12


@dataclass(frozen=True)
class ModelParams:
    N: int
    q: Fraction
    z: complex
    d_max: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        if self.N < 1:
            raise ValueError("N must be positive")
        if not 0 <= self.q <= 1:
            raise ValueError("q must lie in [0, 1]")
        if self.d_max is not None and self.d_max < 1:
            raise ValueError("d_max must be positive")

    def degree_cutoff(self) -> int:
        if self.d_max is not None:
            return self.d_max
        return auto_d_max(abs(self.z), self.N)


@dataclass(frozen=True)
class EvalPoint:
    a: tuple[complex, ...]
    b: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        if len(self.a) != len(self.b):
            raise ValueError("a and b must have equal length")

    @classmethod
    def ones(cls, n: int) -> "EvalPoint":
        return cls((1.0,) * n, (1.0,) * n)


@dataclass(frozen=True)
class EvalResult:
    value: complex
    tail: float
    d_max: int


def auto_d_max(z_abs: float, N: int, tol: float = TAIL_TOL, cap: int = 200) -> int:
    """Smallest practical cutoff: the last degree whose term bound x^d/d!
    (x = |z| N^2) still exceeds tol."""
    x = z_abs * N * N
    d, term, last = 0, 1.0, 1
    while d < cap:
        d += 1
        term *= x / d
        if term >= tol:
            last = d
        elif d > x:
            break
    return last


@lru_cache(maxsize=None)
def _omega_weight(parts: tuple[int, ...], q: Fraction, N: int) -> Fraction:
    """Inverse content-polynomial weight 1 / (Omega_{q/N} Omega_{1/N})."""
    lam = Partition(parts)
    return 1 / (
        content_poly(lam, Fraction(q, N)) * content_poly(lam, Fraction(1, N))
    )


def string_coefficient(alpha: Partition, beta: Partition, q, N: int) -> Fraction:
    """Exact string coefficient H_N(alpha, beta; q): the Plancherel-type sum of
    central characters weighted by inverse content polynomials, over shapes
    with at most N rows."""
    alpha = Partition(alpha)
    beta = Partition(beta)
    q = Fraction(q)
    d = alpha.size
    if beta.size != d:
        raise ValueError("alpha and beta must have equal size")
    total = Fraction(0)
    for lam in partitions_of(d, max_length=N):
        term = Fraction(dim_sym(lam) ** 2)
        term *= central_character(alpha, lam)
        term *= _omega_weight(lam.parts, q, N)
        term *= central_character(beta, lam)
        total += term
    return total / math.factorial(d)


def string_coefficient_square(alpha: Partition, beta: Partition, q, N: int) -> Fraction:
    """Same sum restricted to shapes contained in the N x N square; coincides
    with string_coefficient whenever d <= N."""
    alpha = Partition(alpha)
    beta = Partition(beta)
    q = Fraction(q)
    d = alpha.size
    if beta.size != d:
        raise ValueError("alpha and beta must have equal size")
    total = Fraction(0)
    for lam in partitions_of(d, max_length=N):
        if not fits_in_square(lam, N):
            continue
        term = Fraction(dim_sym(lam) ** 2)
        term *= central_character(alpha, lam)
        term *= _omega_weight(lam.parts, q, N)
        term *= central_character(beta, lam)
        total += term
    return total / math.factorial(d)


def qhciz_character_eval(params: ModelParams, pt: EvalPoint) -> EvalResult:
    """Partial sum of the character expansion: Schur values against inverse
    content polynomials, through z-degree d_max."""
    N = params.N
    if len(pt.a) != N:
        raise ValueError("point vectors must have length N")
    z = complex(params.z)
    cutoff = params.degree_cutoff()
    total = 1 + 0j
    tail = 0.0
    for d in range(1, cutoff + 1):
        term = 0j
        for lam in partitions_of(d, max_length=N):
            sa = complex(schur_eval(lam, pt.a))
            sb = complex(schur_eval(lam, pt.b))
            if sa == 0 or sb == 0:
                continue
            term += sa * sb * float(_omega_weight(lam.parts, params.q, N))
        inc = z**d * term
        total += inc
        tail = abs(inc)
    return EvalResult(total, tail, cutoff)


def qhciz_string_eval(params: ModelParams, pt: EvalPoint) -> EvalResult:
    """Partial sum of the string expansion: power sums against the exact
    string coefficients.  A cross-check path for qhciz_character_eval."""
    N = params.N
    if len(pt.a) != N:
        raise ValueError("point vectors must have length N")
    z = complex(params.z)
    cutoff = params.degree_cutoff()
    total = 1 + 0j
    tail = 0.0
    for d in range(1, cutoff + 1):
        term = 0j
        for alpha in partitions_of(d):
            pa = complex(power_sum_eval(alpha, pt.a))
            if pa == 0:
                continue
            for beta in partitions_of(d):
                h = string_coefficient(alpha, beta, params.q, N)
                if h == 0:
                    continue
                pb = complex(power_sum_eval(beta, pt.b))
                term += pa * pb * float(h)
        inc = z**d / math.factorial(d) * term
        total += inc
        tail = abs(inc)
    return EvalResult(total, tail, cutoff)


def rhciz_character_eval(
    M: int, N: int, z: complex, a, b, d_max: int | None = None
) -> EvalResult:
    """Character expansion of the rectangular integral: coupling (q z^2)^d with
    aspect ratio q = N/M, evaluated on the nonzero spectra a, b."""
    if M < N:
        raise ValueError("need M >= N")
    a = tuple(a)
    b = tuple(b)
    if len(a) != N or len(b) != N:
        raise ValueError("spectra must have length N")
    q = Fraction(N, M)
    coupling = float(q) * complex(z) ** 2
    cutoff = d_max if d_max is not None else auto_d_max(abs(complex(z)) ** 2, N)
    total = 1 + 0j
    tail = 0.0
    for d in range(1, cutoff + 1):
        term = 0j
        for lam in partitions_of(d, max_length=N):
            sa = complex(schur_eval(lam, a))
            sb = complex(schur_eval(lam, b))
            if sa == 0 or sb == 0:
                continue
            weight = 1 / (
                content_poly(lam, Fraction(1, M)) * content_poly(lam, Fraction(1, N))
            )
            term += sa * sb * float(weight)
        inc = coupling**d * term
        total += inc
        tail = abs(inc)
    return EvalResult(total, tail, cutoff)


def rhciz_dimension_eval(
    M: int, N: int, z: complex, a, b, d_max: int | None = None
) -> EvalResult:
    """Dimension-form of the rectangular expansion, z^{2d} N^{2d} / (d!)^2
    against symmetric/general-linear dimension ratios.  Dual formula to
    rhciz_character_eval; the two agree term by term."""
    if M < N:
        raise ValueError("need M >= N")
    a = tuple(a)
    b = tuple(b)
    if len(a) != N or len(b) != N:
        raise ValueError("spectra must have length N")
    cutoff = d_max if d_max is not None else auto_d_max(abs(complex(z)) ** 2, N)
    total = 1 + 0j
    tail = 0.0
    for d in range(1, cutoff + 1):
        term = 0j
        for lam in partitions_of(d, max_length=N):
            sa = complex(schur_eval(lam, a))
            sb = complex(schur_eval(lam, b))
            if sa == 0 or sb == 0:
                continue
            weight = Fraction(
                dim_sym(lam) ** 2, schur_principal(lam, M) * schur_principal(lam, N)
            )
            term += sa * sb * float(weight)
        inc = complex(z) ** (2 * d) * float(N) ** (2 * d) / math.factorial(d) ** 2 * term
        total += inc
        tail = abs(inc)
    return EvalResult(total, tail, cutoff)


def bgw_character_eval(
    x, z: complex, N: int, d_max: int | None = None
) -> EvalResult:
    """Character expansion of the one-matrix integral with linear plus inverse
    source terms, evaluated on the spectrum x of the source product."""
    x = tuple(x)
    if len(x) != N:
        raise ValueError("spectrum must have length N")
    cutoff = d_max if d_max is not None else auto_d_max(abs(complex(z)) ** 2, N)
    total = 1 + 0j
    tail = 0.0
    for d in range(1, cutoff + 1):
        term = 0j
        for lam in partitions_of(d, max_length=N):
            s = complex(schur_eval(lam, x))
            if s == 0:
                continue
            term += s * float(Fraction(dim_sym(lam) ** 2, schur_principal(lam, N)))
        inc = complex(z) ** (2 * d) * float(N) ** (2 * d) / math.factorial(d) ** 2 * term
        total += inc
        tail = abs(inc)
    return EvalResult(total, tail, cutoff)


def truncation_bound(t, rho, N: int) -> tuple[float, float, float]:
    """Constants (u, v, bound) of the strong-coupling truncation estimate
    u_t(rho) exp(-v_t(rho) N^2), valid for rho < t/e."""
    t = float(t)
    rho = float(rho)
    if t <= 0 or rho <= 0:
        raise ValueError("t and rho must be positive")
    ratio = math.e * rho / t
    if ratio >= 1:
        raise ValueError("need rho < t/e")
    u = 1.0 / (1.0 - ratio)
    v = t * math.log(t / (math.e * rho))
    return u, v, u * math.exp(-v * N * N)


# ---------------------------------------------------------------------------
# genus free energies and concentration ratios

def free_energy_candidate(
    g: int,
    params: ModelParams,
    pt: EvalPoint,
    d_max: int | None = None,
    records: list[HurwitzRecord] | None = None,
) -> complex:
    """Truncated genus-g free energy at (a, b, z, q, N) from the connected
    two-legged table."""
    N = params.N
    if len(pt.a) != N:
        raise ValueError("point vectors must have length N")
    cutoff = d_max if d_max is not None else min(params.degree_cutoff(), 6)
    if records is None:
        records = connected_table(cutoff, 2 * g - 2 + 2 * cutoff)
    z = complex(params.z)
    qf = float(params.q)
    total = 0j
    for rec in records:
        if rec.g != g or rec.d > cutoff:
            continue
        la, lb = rec.alpha.length, rec.beta.length
        pa = complex(power_sum_eval(rec.alpha, pt.a))
        pb = complex(power_sum_eval(rec.beta, pt.b))
        total += (
            z**rec.d
            / math.factorial(rec.d)
            * pa
            * pb
            * (-1.0) ** (la + lb)
            / float(N) ** (la + lb)
            * qf**rec.s
            * rec.count
        )
    return total


EXPONENT_CAP = 700.0


def concentration_ratio(
    k: int,
    params: ModelParams,
    pt: EvalPoint,
    d_max: int | None = None,
    records: list[HurwitzRecord] | None = None,
) -> tuple[complex, float]:
    """Ratio Phi_{Nk} = exp(-sum_{g<=k} N^{2-2g} F_{Ng}) I_N and its deviation
    |Phi - 1|.  The inverse exponential normalization is forced by the formal
    identity between the normalized series and the genus > k tail."""
    N = params.N
    cutoff = d_max if d_max is not None else min(params.degree_cutoff(), 6)
    if records is None:
        records = connected_table(cutoff, 2 * k - 2 + 2 * cutoff)
    acc = 0j
    for g in range(k + 1):
        acc += float(N) ** (2 - 2 * g) * free_energy_candidate(
            g, params, pt, d_max=cutoff, records=records
        )
    if abs(acc) > EXPONENT_CAP:
        raise OverflowError(f"normalizing exponent {abs(acc):.3g} exceeds cap")
    eval_params = ModelParams(N=N, q=params.q, z=params.z, d_max=cutoff)
    value = qhciz_character_eval(eval_params, pt).value
    phi = cmath.exp(-acc) * value
    return phi, abs(phi - 1)


# ---------------------------------------------------------------------------
# all-ones fast path (exact stable cancellation)

@lru_cache(maxsize=None)
def ones_coefficient(d: int, N: int, q: Fraction) -> Fraction:
    """Exact z^d coefficient of the character expansion at a = b = 1^N."""
    q = Fraction(q)
    total = Fraction(0)
    for lam in partitions_of(d, max_length=N):
        sp = schur_principal(lam, N)
        total += Fraction(sp * sp) * _omega_weight(lam.parts, q, N)
    return total


def log_coefficients(series: list[Fraction]) -> list[Fraction]:
    """Coefficients of log of a rational power series with constant term 1."""
    if not series or series[0] != 1:
        raise ValueError("series log needs constant term 1")
    logs: list[Fraction] = [Fraction(0)]
    for d in range(1, len(series)):
        acc = Fraction(series[d])
        for j in range(1, d):
            acc -= Fraction(j, d) * logs[j] * series[d - j]
        logs.append(acc)
    return logs


def ones_concentration_deviation(
    k: int,
    N: int,
    q,
    z: complex,
    d_trunc: int | None = None,
    table: dict | None = None,
) -> tuple[complex, float, int]:
    """Deviation |Phi_{Nk} - 1| at a = b = 1^N via exact stable cancellation.

    log I_N and the genus candidates are truncated at the same z-degree
    (capped at N so every retained degree is in the stable range), and the
    difference of exact rational coefficients is exponentiated.  This removes
    the catastrophic cancellation that the literal exp(-F) * I_N evaluation
    suffers at small z.  Returns (Phi, |Phi - 1|, degree used).
    """
    q = Fraction(q)
    cutoff = d_trunc if d_trunc is not None else min(auto_d_max(abs(complex(z)), N), N)
    if table is None:
        table = ones_free_energy_table(cutoff, q, k)
    series = [Fraction(1)] + [ones_coefficient(d, N, q) for d in range(1, cutoff + 1)]
    logs = log_coefficients(series)
    exponent = 0j
    for d in range(1, cutoff + 1):
        delta = logs[d]
        for g in range(k + 1):
            delta -= Fraction(N) ** (2 - 2 * g) * table.get((g, d), Fraction(0))
        exponent += complex(z) ** d * float(delta)
    phi = cmath.exp(exponent)
    return phi, abs(phi - 1), cutoff


def concentration_scan(
    k: int,
    n_values: list[int],
    q,
    z: complex,
    d_cap: int | None = None,
) -> tuple[list[tuple[int, float, int]], float]:
    """Per-N deviations |Phi_{Nk} - 1| at the all-ones point and the fitted
    log-log slope (expected near -2k)."""
    q = Fraction(q)
    if not n_values:
        raise ValueError("need at least one N")
    cutoffs = {
        N: min(auto_d_max(abs(complex(z)), N), N, *(() if d_cap is None else (d_cap,)))
        for N in n_values
    }
    table = ones_free_energy_table(max(cutoffs.values()), q, k)
    rows = []
    for N in n_values:
        _, dev, used = ones_concentration_deviation(
            k, N, q, z, d_trunc=cutoffs[N], table=table
        )
        rows.append((N, dev, used))
    xs = [math.log(N) for N, dev, _ in rows if dev > 0]
    ys = [math.log(dev) for _, dev, _ in rows if dev > 0]
    if len(xs) < 2:
        return rows, float("nan")
    xbar = sum(xs) / len(xs)
    ybar = sum(ys) / len(ys)
    slope = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys)) / sum(
        (x - xbar) ** 2 for x in xs
    )
    return rows, slope
