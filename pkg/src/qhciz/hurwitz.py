"""Graded formal series for the stable integral and its monotone Hurwitz content.

The stable series lives in the ring of formal power sums: a monomial is
z^d p_alpha(A) p_beta(B) hbar^r q^s, encoded as the key (d, alpha, beta, r, s)
with an exact rational coefficient.  Products merge alpha's and beta's by
multiset union and add the numeric grades.  The free energy is the series
log, taken grade by grade in z; by the Exponential Formula its coefficients
are (up to sign and d!) the connected two-legged monotone double Hurwitz
numbers, stratified by genus through r = 2g - 2 + ell(alpha) + ell(beta).

Two cheaper quotient rings are used for larger scans: the diagonal ring
(alpha = beta = 1^d, s = 0) behind the simple-number radius scan, and the
profile ring (keys (d, ell(alpha)+ell(beta), r), q folded in) behind the
all-ones genus free energies.  Both are specializations of the full ring,
so the series log commutes with them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .combinat import Partition, partitions_of
from .characters import dim_sym, plancherel_expectation
from .symfun import content_h

D_MAX_DEFAULT = 8
R_MAX_DEFAULT = 8


class InternalConsistencyError(RuntimeError):
    """A computed table violates an identity that must hold exactly."""


class SeriesKey(NamedTuple):
    d: int
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    r: int
    s: int


UNIT_KEY = SeriesKey(0, (), (), 0, 0)


def genus_of(alpha: tuple[int, ...], beta: tuple[int, ...], r: int) -> int | None:
    """Genus g with r = 2g - 2 + ell(alpha) + ell(beta), or None if impossible."""
    twice = r - len(alpha) - len(beta) + 2
    if twice < 0 or twice % 2:
        return None
    return twice // 2


# ---------------------------------------------------------------------------
# generic z-graded series arithmetic on dict[z-degree][aux-key] -> Fraction

def _conv(a: dict, b: dict, aux_mul) -> dict:
    out: dict = {}
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            k = aux_mul(k1, k2)
            if k is None:
                continue
            out[k] = out.get(k, 0) + c1 * c2
    return {k: c for k, c in out.items() if c != 0}


def _zlog(groups: dict, d_max: int, aux_mul) -> dict:
    """log of a z-graded series with constant term 1, degree by degree."""
    logs: dict = {0: {}}
    for dd in range(1, d_max + 1):
        acc = dict(groups.get(dd, {}))
        for j in range(1, dd):
            for k, c in _conv(logs[j], groups.get(dd - j, {}), aux_mul).items():
                acc[k] = acc.get(k, 0) - Fraction(j, dd) * c
        logs[dd] = {k: c for k, c in acc.items() if c != 0}
    return logs


def _zexp(groups: dict, d_max: int, aux_mul, unit_aux) -> dict:
    """exp of a z-graded series with no constant term."""
    exps: dict = {0: {unit_aux: Fraction(1)}}
    for dd in range(1, d_max + 1):
        acc: dict = {}
        for j in range(1, dd + 1):
            for k, c in _conv(groups.get(j, {}), exps[dd - j], aux_mul).items():
                acc[k] = acc.get(k, 0) + Fraction(j, dd) * c
        exps[dd] = {k: c for k, c in acc.items() if c != 0}
    return exps


# ---------------------------------------------------------------------------
# the full ring

class GradedSeries:
    """Sparse series over SeriesKey with exact rational coefficients."""

    def __init__(self, coeffs: dict, d_max: int, r_max: int):
        self.d_max = d_max
        self.r_max = r_max
        self.coeffs = {SeriesKey(*k): Fraction(c) for k, c in coeffs.items() if c != 0}
        for key in self.coeffs:
            if key.d > d_max or key.r > r_max:
                raise ValueError(f"key {key} exceeds truncation orders")

    def coefficient(self, key) -> Fraction:
        return self.coeffs.get(SeriesKey(*key), Fraction(0))

    def items(self):
        return self.coeffs.items()

    def _aux_mul(self, k1, k2):
        # aux keys are (alpha, beta, r, s); z-degrees are handled outside
        r = k1[2] + k2[2]
        if r > self.r_max:
            return None
        alpha = tuple(sorted(k1[0] + k2[0], reverse=True))
        beta = tuple(sorted(k1[1] + k2[1], reverse=True))
        return (alpha, beta, r, k1[3] + k2[3])

    def _grouped(self) -> dict:
        groups: dict = {}
        for key, c in self.coeffs.items():
            groups.setdefault(key.d, {})[(key.alpha, key.beta, key.r, key.s)] = c
        return groups

    @classmethod
    def _from_grouped(cls, groups, d_max, r_max) -> "GradedSeries":
        coeffs = {
            SeriesKey(dd, *aux): c
            for dd, layer in groups.items()
            for aux, c in layer.items()
        }
        return cls(coeffs, d_max, r_max)

    def __mul__(self, other: "GradedSeries") -> "GradedSeries":
        if (self.d_max, self.r_max) != (other.d_max, other.r_max):
            raise ValueError("truncation orders differ")
        a, b = self._grouped(), other._grouped()
        out: dict = {}
        for d1, layer1 in a.items():
            for d2, layer2 in b.items():
                if d1 + d2 > self.d_max:
                    continue
                target = out.setdefault(d1 + d2, {})
                for k, c in _conv(layer1, layer2, self._aux_mul).items():
                    target[k] = target.get(k, 0) + c
        return GradedSeries._from_grouped(out, self.d_max, self.r_max)

    def __add__(self, other: "GradedSeries") -> "GradedSeries":
        coeffs = dict(self.coeffs)
        for k, c in other.coeffs.items():
            coeffs[k] = coeffs.get(k, 0) + c
        return GradedSeries(coeffs, self.d_max, self.r_max)

    def __sub__(self, other: "GradedSeries") -> "GradedSeries":
        return self + other.scale(-1)

    def scale(self, factor) -> "GradedSeries":
        return GradedSeries(
            {k: c * Fraction(factor) for k, c in self.coeffs.items()},
            self.d_max,
            self.r_max,
        )

    def restrict(self, predicate) -> "GradedSeries":
        return GradedSeries(
            {k: c for k, c in self.coeffs.items() if predicate(k)},
            self.d_max,
            self.r_max,
        )

    def restrict_genus(self, k: int) -> "GradedSeries":
        """Keep keys whose Riemann-Hurwitz genus is defined and at most k."""

        def keep(key: SeriesKey) -> bool:
            if key == UNIT_KEY:
                return False
            g = genus_of(key.alpha, key.beta, key.r)
            return g is not None and g <= k

        return self.restrict(keep)

    def log(self) -> "GradedSeries":
        if self.coefficient(UNIT_KEY) != 1:
            raise ValueError("series log needs constant term 1")
        groups = self._grouped()
        unit_layer = groups.get(0, {})
        if len(unit_layer) != 1:
            raise ValueError("series log needs scalar constant term")
        groups = {d: layer for d, layer in groups.items() if d > 0}
        return GradedSeries._from_grouped(
            _zlog({0: {UNIT_KEY[1:]: Fraction(1)}, **groups}, self.d_max, self._aux_mul),
            self.d_max,
            self.r_max,
        )

    def exp(self) -> "GradedSeries":
        groups = self._grouped()
        if 0 in groups:
            raise ValueError("series exp needs vanishing constant term")
        return GradedSeries._from_grouped(
            _zexp(groups, self.d_max, self._aux_mul, UNIT_KEY[1:]),
            self.d_max,
            self.r_max,
        )


def build_disconnected(
    d_max: int = D_MAX_DEFAULT, r_max: int = R_MAX_DEFAULT
) -> GradedSeries:
    """The stable integral: coefficient of (d,a,b,r,s) is (-1)^r/d! times the
    two-legged monotone walk count, computed exactly from Plancherel sums."""
    if not (1 <= d_max <= 12 and 0 <= r_max <= 24):
        raise ValueError("truncation orders out of range")
    coeffs = {UNIT_KEY: Fraction(1)}
    for d in range(1, d_max + 1):
        fact = math.factorial(d)
        for alpha in partitions_of(d):
            for beta in partitions_of(d):
                for r in range(r_max + 1):
                    # walks of length r exist only when r + ell(alpha) +
                    # ell(beta) is even (sign character)
                    if (r + len(alpha.parts) + len(beta.parts)) % 2:
                        continue
                    for s in range(r + 1):
                        w = plancherel_expectation(d, alpha, beta, s, r)
                        if w == 0:
                            continue
                        if w.denominator != 1 or w < 0:
                            raise InternalConsistencyError(
                                f"walk count W^{r}({alpha.parts},{beta.parts};{s}) "
                                f"is not a nonnegative integer: {w}"
                            )
                        coeffs[SeriesKey(d, alpha.parts, beta.parts, r, s)] = Fraction(
                            (-1) ** r * w.numerator, fact
                        )
    return GradedSeries(coeffs, d_max, r_max)


def series_log(series: GradedSeries) -> GradedSeries:
    """Free energy log of the stable integral (Exponential Formula)."""
    return series.log()


def series_exp(series: GradedSeries) -> GradedSeries:
    return series.exp()


@dataclass(frozen=True)
class HurwitzRecord:
    g: int | None
    alpha: Partition
    beta: Partition
    r: int
    s: int
    count: int
    connected: bool

    @property
    def d(self) -> int:
        return self.alpha.size


def _record_sort_key(rec: HurwitzRecord):
    order_a = {p.parts: i for i, p in enumerate(partitions_of(rec.d))}
    return (rec.d, order_a[rec.alpha.parts], order_a[rec.beta.parts], rec.r, rec.s)


def connected_table(
    d_max: int = D_MAX_DEFAULT,
    r_max: int = R_MAX_DEFAULT,
    series: GradedSeries | None = None,
) -> list[HurwitzRecord]:
    """Connected two-legged monotone double Hurwitz numbers from the series log.

    Every nonzero coefficient must sit on the Riemann-Hurwitz stratum
    r = 2g - 2 + ell(alpha) + ell(beta) with integer g >= 0; anything else is
    a fatal internal-consistency error.
    """
    if series is None:
        series = build_disconnected(d_max, r_max)
    free_energy = series.log()
    records = []
    for key, c in free_energy.items():
        if key.d == 0:
            continue
        value = Fraction((-1) ** key.r) * c * math.factorial(key.d)
        if value == 0:
            continue
        g = genus_of(key.alpha, key.beta, key.r)
        if g is None or value.denominator != 1 or value < 0:
            raise InternalConsistencyError(
                f"connected coefficient at {key} violates Riemann-Hurwitz: {value}"
            )
        records.append(
            HurwitzRecord(
                g=g,
                alpha=Partition(key.alpha),
                beta=Partition(key.beta),
                r=key.r,
                s=key.s,
                count=int(value),
                connected=True,
            )
        )
    records.sort(key=_record_sort_key)
    return records


# ---------------------------------------------------------------------------
# diagonal ring: alpha = beta = 1^d, s = 0 (simple monotone numbers)

@lru_cache(maxsize=None)
def _plancherel_f(d: int, r: int) -> Fraction:
    """Plancherel expectation of f_r over shapes of d (trivial class weights)."""
    total = Fraction(0)
    for lam in partitions_of(d):
        total += Fraction(dim_sym(lam) ** 2) * content_h(r, lam)
    return total / math.factorial(d)


@lru_cache(maxsize=None)
def _simple_connected_coeffs(d_max: int, r_cap: int) -> dict:
    """log coefficients of the diagonal series, keyed (d, r)."""

    def aux_mul(r1, r2):
        r = r1 + r2
        return r if r <= r_cap else None

    groups: dict = {0: {0: Fraction(1)}}
    for d in range(1, d_max + 1):
        fact = math.factorial(d)
        layer = {}
        for r in range(0, r_cap + 1, 2):  # odd r vanish by the sign character
            w = _plancherel_f(d, r)
            if w == 0:
                continue
            layer[r] = w / fact
        groups[d] = layer
    logs = _zlog(groups, d_max, aux_mul)
    out = {}
    for d in range(1, d_max + 1):
        for r, c in logs[d].items():
            if c == 0:
                continue
            if r < 2 * d - 2 or (r - (2 * d - 2)) % 2:
                raise InternalConsistencyError(
                    f"simple connected coefficient at d={d}, r={r} violates "
                    "Riemann-Hurwitz"
                )
            out[(d, r)] = c
    return out


def simple_connected_count(d: int, g: int, *, d_max: int | None = None) -> Fraction:
    """Connected simple monotone number divided by d!: the z^d coefficient of
    the genus-g simple generating series."""
    d_max = d if d_max is None else d_max
    table = _simple_connected_coeffs(d_max, 2 * g - 2 + 2 * d_max)
    return table.get((d, 2 * g - 2 + 2 * d), Fraction(0))


def simple_series_ratio_scan(d_max: int, g: int) -> list[tuple[int, Fraction, float | None]]:
    """Coefficients c_d of the genus-g simple series and successive ratios.

    Row d carries (d, c_d, c_{d+1} / c_d); the ratios approach the reciprocal
    radius of convergence 27/2 from below.  The coefficient table is built one
    degree past d_max so that the last row still has a ratio.
    """
    if d_max < 1:
        raise ValueError("d_max must be positive")
    table = _simple_connected_coeffs(d_max + 1, 2 * g - 2 + 2 * (d_max + 1))
    rows: list[tuple[int, Fraction, float | None]] = []
    for d in range(1, d_max + 1):
        c = table.get((d, 2 * g - 2 + 2 * d), Fraction(0))
        succ = table.get((d + 1, 2 * g + 2 * d), Fraction(0))
        ratio = float(succ / c) if c != 0 else None
        rows.append((d, c, ratio))
    return rows


# ---------------------------------------------------------------------------
# profile ring: keys (ell(alpha)+ell(beta), r) with q folded in, for the
# all-ones genus free energies

def _content_elementary(lam: Partition) -> list[int]:
    """Coefficients of prod over cells of (u + c(cell)) in increasing powers of u.

    This is the class generating polynomial: its u^m coefficient equals the
    central-character sum over classes with m cycles (Jucys' identity), which
    removes any need for character tables here.
    """
    coeffs = [1]
    for c in lam.contents():
        nxt = [0] * (len(coeffs) + 1)
        for j, a in enumerate(coeffs):
            nxt[j + 1] += a
            nxt[j] += a * c
        coeffs = nxt
    return coeffs


@lru_cache(maxsize=None)
def ones_free_energy_table(
    d_max: int, q: Fraction, g_max: int
) -> dict[tuple[int, int], Fraction]:
    """z-coefficients of the genus free energies at the all-ones point.

    Returns {(g, d): coefficient} for g <= g_max, d <= d_max, with the q-split
    weights folded in.  At a = b = 1^N the power-sum prefactors reduce to
    (-1)^{ell(alpha)+ell(beta)}, so classes only enter through their cycle
    counts and the table is independent of N.
    """
    q = Fraction(q)
    r_cap = 2 * g_max - 2 + 2 * d_max

    def aux_mul(k1, k2):
        m = k1[0] + k2[0]
        r = k1[1] + k2[1]
        if r > r_cap:
            return None
        return (m, r)

    groups: dict = {0: {(0, 0): Fraction(1)}}
    for d in range(1, d_max + 1):
        fact2 = Fraction(math.factorial(d)) ** 2
        layer: dict = {}
        for lam in partitions_of(d):
            dim2 = dim_sym(lam) ** 2
            poly = _content_elementary(lam)
            sq = [0] * (2 * d + 1)
            for i, a in enumerate(poly):
                if a == 0:
                    continue
                for j, b in enumerate(poly):
                    sq[i + j] += a * b
            fs = [content_h(s, lam) for s in range(r_cap + 1)]
            for r in range(r_cap + 1):
                split_sum = sum(q**s * fs[s] * fs[r - s] for s in range(r + 1))
                if split_sum == 0:
                    continue
                base = Fraction((-1) ** r * dim2) * split_sum / fact2
                for m in range(2 * d + 1):
                    if sq[m] == 0:
                        continue
                    key = (m, r)
                    layer[key] = layer.get(key, 0) + base * sq[m]
        groups[d] = {k: c for k, c in layer.items() if c != 0}
        for (m, r) in groups[d]:
            if (r - m) % 2:
                raise InternalConsistencyError(
                    f"profile coefficient at d={d}, m={m}, r={r} has odd parity"
                )
    logs = _zlog(groups, d_max, aux_mul)
    table: dict[tuple[int, int], Fraction] = {}
    for d in range(1, d_max + 1):
        for (m, r), c in logs[d].items():
            if c == 0:
                continue
            if (r - m) % 2 or r - m < -2:
                raise InternalConsistencyError(
                    f"connected profile coefficient at d={d}, m={m}, r={r} "
                    "violates Riemann-Hurwitz"
                )
            g = (r - m + 2) // 2
            if g > g_max:
                continue
            table[(g, d)] = table.get((g, d), Fraction(0)) + c
    return table
