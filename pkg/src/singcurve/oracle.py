"""Exhaustive point counts on explicit curves over small fields.

These routines share nothing with the zeta/gluing formulas beyond field
arithmetic, so they serve as independent ground truth.  Each estimates its
work first and refuses to run above ``work_bound``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from singcurve import kernels, limits
from singcurve.errors import ValidationError
from singcurve.ff import (
    FieldCtx,
    FieldElement,
    embedding,
    enumerate_elements,
    enumerate_monic_irreducibles,
    field_create,
    field_of_order,
    prime_power,
)


def _lift(ctx: FieldCtx, n: int) -> tuple[FieldCtx, np.ndarray]:
    big = field_create(ctx.p, ctx.k * n)
    return big, embedding(ctx, big)


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over ``ctx``."""

    ctx: FieldCtx
    a1: FieldElement
    a2: FieldElement
    a3: FieldElement
    a4: FieldElement
    a6: FieldElement

    def __post_init__(self):
        if self.discriminant().is_zero():
            raise ValidationError(f"singular Weierstrass curve {self.coefficients}")

    @classmethod
    def from_ints(cls, ctx: FieldCtx, a1=0, a2=0, a3=0, a4=0, a6=0) -> WeierstrassCurve:
        """Coefficients given as field indices."""
        return cls(ctx, *(ctx.from_index(a) for a in (a1, a2, a3, a4, a6)))

    @property
    def coefficients(self) -> tuple[FieldElement, ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def discriminant(self) -> FieldElement:
        a1, a2, a3, a4, a6 = self.coefficients
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def __repr__(self) -> str:
        names = ("a1", "a2", "a3", "a4", "a6")
        body = ", ".join(f"{n}={c!r}" for n, c in zip(names, self.coefficients) if not c.is_zero())
        return f"WeierstrassCurve(F_{self.ctx.order}; {body or 'all zero'})"


def weierstrass_count(c: WeierstrassCurve, n: int = 1, work_bound: int = limits.WORK_BOUND) -> int:
    """Projective points over F_{q^n}: every affine (x, y) plus the point at infinity."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    big_order = c.ctx.order**n
    limits.check(f"Weierstrass count over F_{big_order}", big_order**2, work_bound)
    big, emb = _lift(c.ctx, n)
    coeffs = [int(emb[a.index]) for a in c.coefficients]
    return kernels.weierstrass_affine_count(coeffs, *big.tables.args()) + 1


@dataclass
class ScanResult:
    q: int
    distribution: dict[int, int]
    representatives: dict[int, list[WeierstrassCurve]] = field(default_factory=dict)

    @property
    def max_n1(self) -> int:
        return max(self.distribution)


def scan_weierstrass(q: int, work_bound: int = limits.WORK_BOUND, keep: int = 3) -> ScanResult:
    """Count every smooth long-Weierstrass curve over F_q.

    Returns the distribution of N_1 over all coefficient tuples and up to
    ``keep`` representative curves per value, lowest code first.
    """
    ctx = field_of_order(q)
    limits.check(f"Weierstrass scan over F_{q}", q**7, work_bound)
    smooth, counts = kernels.weierstrass_scan(*ctx.tables.args())
    values, freq = np.unique(counts[smooth], return_counts=True)
    result = ScanResult(q, {int(v): int(f) for v, f in zip(values, freq)})
    for v in result.distribution:
        codes = np.flatnonzero(smooth & (counts == v))[:keep]
        reps = []
        for code in codes:
            code = int(code)
            idx = []
            for _ in range(5):
                code, r = divmod(code, q)
                idx.append(r)
            reps.append(WeierstrassCurve.from_ints(ctx, *idx))
        result.representatives[v] = reps
    return result


def find_weierstrass(q: int, n1: int, work_bound: int = limits.WORK_BOUND) -> WeierstrassCurve:
    """A smooth Weierstrass curve over F_q with exactly n1 rational points."""
    scan = scan_weierstrass(q, work_bound, keep=1)
    if n1 not in scan.representatives:
        raise ValidationError(f"no genus-1 curve over F_{q} has {n1} rational points")
    return scan.representatives[n1][0]


def curve_b_count(q: int, n: int = 1, work_bound: int = limits.WORK_BOUND) -> int:
    """F_{q^n}-points on the image of (s:t) -> (s^{q+1} : s^q t + s t^q : t^{q+1}).

    Parameters run over P^1(F_{q^L}), L = lcm(n, 2), which contains every
    closed point of degree dividing n as well as every degree-2 point; the
    image triples are normalised and kept when fixed by x -> x^{q^n}.
    """
    p, k = prime_power(q)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    ell = math.lcm(n, 2)
    limits.check(f"curve B over F_{q}^{n}", q ** (2 * ell), work_bound)
    big = field_create(p, k * ell)
    qm1 = big.order - 1
    frob = (q**n - 1) % qm1 + 1
    codes = kernels.curve_b_fixed_images(q, frob, *big.tables.args())
    return int(np.unique(codes).size)


@dataclass(frozen=True)
class PlaneCurve:
    """Homogeneous ``sum c X^i Y^j Z^k = 0`` of degree ``degree`` over ``ctx``."""

    ctx: FieldCtx
    degree: int
    monomials: tuple[tuple[int, int, int, FieldElement], ...]

    def __post_init__(self):
        object.__setattr__(self, "monomials", tuple(self.monomials))
        if all(c.is_zero() for *_, c in self.monomials):
            raise ValidationError("zero polynomial")
        for i, j, k, _ in self.monomials:
            if i + j + k != self.degree:
                raise ValidationError(f"monomial X^{i} Y^{j} Z^{k} is not of degree {self.degree}")

    @classmethod
    def from_ints(cls, ctx: FieldCtx, terms: Sequence[tuple[int, int, int, int]]) -> PlaneCurve:
        """Terms ``(i, j, k, coefficient index)``; degree taken from the first."""
        terms = list(terms)
        if not terms:
            raise ValidationError("zero polynomial")
        deg = sum(terms[0][:3])
        return cls(ctx, deg, tuple((i, j, k, ctx.from_index(c)) for i, j, k, c in terms))


def plane_curve_count(c: PlaneCurve, n: int = 1, work_bound: int = limits.WORK_BOUND) -> int:
    """Projective points over F_{q^n}: chart z=1, then (x:1:0), then (1:0:0)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    big_order = c.ctx.order**n
    limits.check(f"plane curve count over F_{big_order}", big_order**2, work_bound)
    big, emb = _lift(c.ctx, n)
    exps = [(i, j, k) for i, j, k, _ in c.monomials]
    coefs = [int(emb[e.index]) for *_, e in c.monomials]
    return kernels.plane_curve_points(exps, coefs, *big.tables.args())


def closed_points_p1_brute(q: int, d: int, work_bound: int = limits.IRREDUCIBLE_BOUND) -> int:
    """Closed points of degree d on P^1 over F_q, by listing them."""
    p, k = prime_power(q)
    if d == 1:
        return len(enumerate_elements(field_create(p, k), bound=work_bound)) + 1
    return len(enumerate_monic_irreducibles(p, k, d, bound=work_bound))


def brute_counts(c: WeierstrassCurve, horizon: int, work_bound: int = limits.WORK_BOUND) -> list[int]:
    return [weierstrass_count(c, n, work_bound) for n in range(1, horizon + 1)]
