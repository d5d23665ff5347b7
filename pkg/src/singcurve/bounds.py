"""Closed-form bounds for curves with geometric genus g and arithmetic genus pi.

Notation: m = floor(2 sqrt q), N_q(g) the maximum number of rational points
of a smooth genus-g curve over F_q.

* ``bound_A``: q + 1 + g m + pi - g, valid for every curve;
* ``bound_B``: N_q(g) + pi - g, needs N_q(g);
* δ-optimal curves attain bound_B, maximal curves attain bound_A.

Only g <= 1 has a closed form for N_q(g); for larger genus callers pass a
known value explicitly and otherwise get ``None``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from singcurve import intpoly
from singcurve.errors import ValidationError
from singcurve.ff import prime_power


@dataclass(frozen=True)
class GenusProfile:
    q: int
    g: int
    pi: int

    def __post_init__(self):
        prime_power(self.q)
        if self.g < 0:
            raise ValidationError(f"geometric genus must be >= 0, got {self.g}")
        if self.pi < self.g:
            raise ValidationError(f"arithmetic genus {self.pi} is below geometric genus {self.g}")


def _halve(value: int, formula: str) -> int:
    half, r = divmod(value, 2)
    if r:
        raise ArithmeticError(f"{formula}: {value} is odd")
    return half


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def weil_m(q: int) -> int:
    """floor(2 sqrt q), exactly."""
    prime_power(q)
    return math.isqrt(4 * q)


def bound_A(profile: GenusProfile) -> int:
    q, g, pi = profile.q, profile.g, profile.pi
    return q + 1 + g * weil_m(q) + pi - g


def waterhouse_full(q: int) -> bool:
    """True when N_q(1) = q + 1 + m: p does not divide m, q is a square, or q = p."""
    p, _ = prime_power(q)
    return weil_m(q) % p != 0 or is_square(q) or q == p


def nq(q: int, g: int) -> int:
    """N_q(g) for g in {0, 1}."""
    if g == 0:
        prime_power(q)
        return q + 1
    if g == 1:
        m = weil_m(q)
        return q + 1 + m if waterhouse_full(q) else q + m
    raise ValidationError(f"N_q(g) is not known in closed form for g = {g}; supply it explicitly")


def nq_or_none(q: int, g: int, external: Optional[int] = None) -> Optional[int]:
    if external is not None:
        return external
    return nq(q, g) if g <= 1 else None


def bound_B(profile: GenusProfile, external_nqg: Optional[int] = None) -> Optional[int]:
    n = nq_or_none(profile.q, profile.g, external_nqg)
    return None if n is None else n + profile.pi - profile.g


def delta_optimal_pi_max(q: int, g: int) -> int:
    """Largest pi with N_q(g, pi) = N_q(g) + pi - g, for g in {0, 1}.

    This is g plus the number of degree-2 points on an optimal genus-g curve.
    """
    if g == 0:
        return _halve(q * q - q, "(q^2 - q)/2")
    if g == 1:
        m = weil_m(q)
        if waterhouse_full(q):
            return 1 + _halve(q * q + q - m * (m + 1), "(q^2 + q - m(m+1))/2")
        return 1 + _halve(q * q + q + m * (1 - m), "(q^2 + q + m(1-m))/2")
    raise ValidationError(f"δ-optimal range is not known in closed form for g = {g}")


def maximal_pi_max(q: int, g: int) -> int:
    """g + B_2 of a maximal smooth genus-g curve.

    The value is below g when no such curve can exist.
    """
    if g < 0:
        raise ValidationError(f"genus must be >= 0, got {g}")
    m = weil_m(q)
    return g + _halve(q * q + (2 * g - 1) * q - g * m * (m + 1), "(q^2 + (2g-1)q - g m(m+1))/2")


def ihara_genus_check(q: int, g: int) -> bool:
    """g <= (q - sqrt q)/2; only meaningful for square q."""
    prime_power(q)
    if not is_square(q):
        raise ValidationError(f"{q} is not a square")
    return 2 * g <= q - math.isqrt(q)


@dataclass(frozen=True)
class MaximalZeta:
    """Z(T) = numerator(T) / ((1 - T)(1 - qT))."""

    q: int
    g: int
    pi: int
    numerator: tuple[int, ...]

    denominator = "(1 - T)(1 - qT)"


def maximal_zeta(q: int, g: int, pi: int) -> MaximalZeta:
    """Zeta function forced on a maximal curve: (qT^2 + mT + 1)^g (1 + T)^(pi - g)."""
    GenusProfile(q, g, pi)
    cap = maximal_pi_max(q, g)
    if pi > cap:
        raise ValidationError(f"no maximal curve with q={q}, g={g}, pi={pi}: pi must be <= {cap}")
    if is_square(q) and not ihara_genus_check(q, g):
        raise ValidationError(f"no maximal smooth curve of genus {g} over F_{q} (g > (q - sqrt q)/2)")
    m = weil_m(q)
    numer = intpoly.mul(intpoly.power((1, m, q), g), intpoly.power((1, 1), pi - g))
    return MaximalZeta(q, g, pi, numer)


def _attainable_pi_max(q: int, g: int, nqg: Optional[int]) -> Optional[int]:
    if g <= 1:
        return delta_optimal_pi_max(q, g)
    if nqg is not None and nqg == q + 1 + g * weil_m(q):
        # every optimal curve is then maximal and they share one B_2
        return maximal_pi_max(q, g)
    return None


@dataclass(frozen=True)
class BoundSet:
    q: int
    g: int
    pi: int
    m: int
    bound_A: int
    bound_B: Optional[int]
    nqg: Optional[int]
    delta_optimal_pi_max: Optional[int]
    maximal_pi_max: int
    bound_B_attained: Optional[bool]
    bound_A_attained: Optional[bool]

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def bound_set(q: int, g: int, pi: int, external_nqg: Optional[int] = None) -> BoundSet:
    """Every bound for the profile, with attainability where it is decidable.

    ``bound_B_attained`` says whether N_q(g, pi) equals bound_B; for g <= 1
    this is exactly pi <= delta_optimal_pi_max.  ``bound_A_attained`` says
    whether a maximal curve exists, which needs N_q(g) = q + 1 + gm as well.
    """
    profile = GenusProfile(q, g, pi)
    m = weil_m(q)
    nqg = nq_or_none(q, g, external_nqg)
    if nqg is not None and nqg > q + 1 + g * m:
        raise ValidationError(f"N_q(g) = {nqg} exceeds q + 1 + gm = {q + 1 + g * m}")
    dmax = _attainable_pi_max(q, g, nqg)
    b_attained = None if dmax is None else pi <= dmax
    if nqg is None:
        a_attained = None
    elif nqg < q + 1 + g * m:
        a_attained = False
    else:
        a_attained = b_attained
    return BoundSet(
        q=q,
        g=g,
        pi=pi,
        m=m,
        bound_A=bound_A(profile),
        bound_B=None if nqg is None else nqg + pi - g,
        nqg=nqg,
        delta_optimal_pi_max=dmax,
        maximal_pi_max=maximal_pi_max(q, g),
        bound_B_attained=b_attained,
        bound_A_attained=a_attained,
    )
