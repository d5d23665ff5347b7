"""Zeta functions of smooth curves as integer numerators.

A smooth curve of genus g over F_q has

    Z(T) = P(T) / ((1 - T)(1 - qT)),   P(T) = 1 + a_1 T + ... + a_{2g} T^{2g}.

Point counts follow from the power sums S_n of the inverse roots of P,
which Newton's identities give exactly over the integers:

    N_n = q^n + 1 - S_n.

Closed-point numbers come from Möbius inversion of N_n = sum_{d|n} d B_d.
Inverse roots are never computed numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from singcurve.errors import ValidationError
from singcurve.ff import prime_power

VALIDATION_HORIZON = 8


def divisors(n: int) -> list[int]:
    if n < 1:
        raise ValueError(f"divisors need n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError(f"mobius needs n >= 1, got {n}")
    result, f = 1, 2
    while f * f <= n:
        if n % f == 0:
            n //= f
            if n % f == 0:
                return 0
            result = -result
        f += 1
    return -result if n > 1 else result


def power_sums(coeffs: Sequence[int], n_max: int) -> list[int]:
    """Power sums S_1..S_{n_max} of the inverse roots of ``coeffs``.

    ``coeffs`` is any integer polynomial with constant term 1, read as
    prod(1 - w_i T).  Newton: S_n = -n a_n - sum_{j=1}^{n-1} a_j S_{n-j}.
    """
    if not coeffs or coeffs[0] != 1:
        raise ValidationError("constant term must be 1")
    deg = len(coeffs) - 1
    s: list[int] = []
    for n in range(1, n_max + 1):
        acc = -n * coeffs[n] if n <= deg else 0
        for j in range(1, min(n - 1, deg) + 1):
            acc -= coeffs[j] * s[n - j - 1]
        s.append(acc)
    return s


def counts_from_numerator(q: int, coeffs: Sequence[int], horizon: int) -> list[int]:
    """N_1..N_horizon for Z(T) = coeffs(T) / ((1 - T)(1 - qT))."""
    return [q**n + 1 - s for n, s in enumerate(power_sums(coeffs, horizon), start=1)]


def census_from_counts(counts: Sequence[int], strict: bool = True) -> dict[int, int]:
    """B_d = (1/d) sum_{e|d} mu(d/e) N_e for d = 1..len(counts).

    With ``strict`` a negative B_d raises; a non-integral one always does.
    """
    census = {}
    for d in range(1, len(counts) + 1):
        total = sum(mobius(d // e) * counts[e - 1] for e in divisors(d))
        b, r = divmod(total, d)
        if r:
            raise ValidationError(f"B_{d} = {total}/{d} is not an integer")
        if strict and b < 0:
            raise ValidationError(f"B_{d} = {b} is negative; numerator does not come from a curve")
        census[d] = b
    return census


@dataclass(frozen=True)
class SmoothZeta:
    q: int
    g: int
    numer: tuple[int, ...]

    @property
    def n1(self) -> int:
        return self.q + 1 + (self.numer[1] if self.g else 0)

    def counts(self, horizon: int) -> list[int]:
        return counts_from_numerator(self.q, self.numer, horizon)


@dataclass(frozen=True)
class PointCountTable:
    q: int
    counts: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.counts[n - 1]


def zeta_from_numerator(q: int, coeffs: Sequence[int], horizon: int = VALIDATION_HORIZON) -> SmoothZeta:
    """Validate a zeta numerator.

    Checks odd length, constant term 1, the functional equation
    a_{2g-i} = q^{g-i} a_i and B_d >= 0 for d <= ``horizon``.
    """
    prime_power(q)
    coeffs = tuple(int(c) for c in coeffs)
    if len(coeffs) % 2 == 0:
        raise ValidationError(f"numerator must have odd length 2g+1, got {len(coeffs)}")
    if coeffs[0] != 1:
        raise ValidationError(f"numerator must start with 1, got {coeffs[0]}")
    g = (len(coeffs) - 1) // 2
    for i in range(g + 1):
        if coeffs[2 * g - i] != q ** (g - i) * coeffs[i]:
            raise ValidationError(
                f"functional equation fails at i={i}: a_{2 * g - i} = {coeffs[2 * g - i]}, "
                f"expected q^{g - i} * a_{i} = {q ** (g - i) * coeffs[i]}"
            )
    census_from_counts(counts_from_numerator(q, coeffs, horizon))
    return SmoothZeta(q, g, coeffs)


def genus0_zeta(q: int) -> SmoothZeta:
    return zeta_from_numerator(q, (1,))


def point_count(z: SmoothZeta, n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return z.counts(n)[-1]


def point_count_table(z: SmoothZeta, horizon: int) -> PointCountTable:
    return PointCountTable(z.q, tuple(z.counts(horizon)))


def closed_point_census(z: SmoothZeta, horizon: int, strict: bool = True) -> dict[int, int]:
    """Number of closed points of each degree d = 1..horizon."""
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    return census_from_counts(z.counts(horizon), strict=strict)


def elliptic_zeta_from_count(q: int, n1: int) -> SmoothZeta:
    """Genus-1 numerator 1 + (n1 - q - 1) T + q T^2."""
    prime_power(q)
    m = math.isqrt(4 * q)
    if abs(n1 - (q + 1)) > m:
        raise ValidationError(f"N_1 = {n1} is outside the Hasse range [{q + 1 - m}, {q + 1 + m}]")
    return zeta_from_numerator(q, (1, n1 - q - 1, q))
