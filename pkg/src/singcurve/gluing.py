"""Numerical model of singular curves obtained by gluing closed points.

Starting from a smooth curve (known through its zeta numerator), a
singularity is prescribed by the closed points Q_1..Q_s it absorbs and a
conductor exponent n_i for each.  The glued point P is rational and has

    delta_P = sum n_i deg Q_i - 1.

The arithmetic genus is g + sum delta_P.  Over F_{q^n} the curve loses the
points of each Q_i with deg Q_i | n and gains P itself.  Its zeta function
is the base zeta times

    prod_P  prod_i (1 - T^{deg Q_i}) / (1 - T).

Closed points are consumed by degree only.  No two prescriptions may share a
point, so the number of branches of degree d must not exceed B_d(base).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from singcurve import bounds, intpoly
from singcurve.errors import BudgetExceeded, ValidationError
from singcurve.zeta import SmoothZeta, closed_point_census, counts_from_numerator

DEFAULT_HORIZON = 6


@dataclass(frozen=True)
class BranchSpec:
    degree: int
    multiplicity: int = 1

    def __post_init__(self):
        if self.degree < 1 or self.multiplicity < 1:
            raise ValidationError(f"branch degree and multiplicity must be >= 1, got {self}")


@dataclass(frozen=True)
class SingularityPrescription:
    branches: tuple[BranchSpec, ...]

    def __post_init__(self):
        object.__setattr__(self, "branches", tuple(self.branches))
        if not self.branches:
            raise ValidationError("a singularity needs at least one branch")
        if delta_of(self) < 1:
            raise ValidationError("prescription has delta = 0: a single rational branch with multiplicity 1 is not singular")

    @classmethod
    def of(cls, *pairs: tuple[int, int]) -> SingularityPrescription:
        """``SingularityPrescription.of((2, 1), (1, 3))``."""
        return cls(tuple(BranchSpec(d, n) for d, n in pairs))


def delta_of(p: SingularityPrescription) -> int:
    return sum(b.degree * b.multiplicity for b in p.branches) - 1


@dataclass(frozen=True)
class SingularCurveModel:
    base: SmoothZeta
    singularities: tuple[SingularityPrescription, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "singularities", tuple(self.singularities))

    @property
    def q(self) -> int:
        return self.base.q

    @property
    def g(self) -> int:
        return self.base.g

    def branch_degrees(self) -> Counter:
        return Counter(b.degree for s in self.singularities for b in s.branches)


def validate(model: SingularCurveModel, horizon: Optional[int] = None) -> SingularCurveModel:
    """Check that the base has enough closed points of each branch degree."""
    demand = model.branch_degrees()
    if not demand:
        return model
    top = max(max(demand), horizon or 0)
    census = closed_point_census(model.base, top)
    for d in sorted(demand):
        if demand[d] > census[d]:
            raise BudgetExceeded(d, demand[d], census[d])
    return model


def arithmetic_genus(model: SingularCurveModel) -> int:
    return model.g + sum(delta_of(s) for s in model.singularities)


def rational_points(model: SingularCurveModel, n: int) -> int:
    """Points over F_{q^n}: base count, minus absorbed points, plus glued points."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    base = counts_from_numerator(model.q, model.base.numer, n)[-1]
    absorbed = sum(b.degree for s in model.singularities for b in s.branches if n % b.degree == 0)
    return base - absorbed + len(model.singularities)


def point_counts(model: SingularCurveModel, horizon: int) -> list[int]:
    return [rational_points(model, n) for n in range(1, horizon + 1)]


def singular_zeta_factor(model: SingularCurveModel) -> tuple[int, ...]:
    """prod_P prod_branches (1 - T^d) / (1 - T), as integer coefficients."""
    factor: tuple[int, ...] = (1,)
    for s in model.singularities:
        local = intpoly.product(intpoly.one_minus_t_pow(b.degree) for b in s.branches)
        factor = intpoly.mul(factor, intpoly.exact_div(local, (1, -1)))
    return factor


def zeta_numerator(model: SingularCurveModel) -> tuple[int, ...]:
    """Numerator of the full zeta over (1 - T)(1 - qT)."""
    return intpoly.mul(model.base.numer, singular_zeta_factor(model))


def zeta_point_counts(model: SingularCurveModel, horizon: int) -> list[int]:
    """N'_1..N'_horizon read off the zeta function alone."""
    return counts_from_numerator(model.q, zeta_numerator(model), horizon)


def delta_x(model: SingularCurveModel) -> int:
    """Geometric points of the normalisation over singular points, minus the singular points."""
    return sum(sum(b.degree for b in s.branches) - 1 for s in model.singularities)


def construct_principal(base: SmoothZeta, a: Mapping[int, int]) -> SingularCurveModel:
    """Turn ``a[i]`` closed points of degree i into rational singular points."""
    sings = []
    for i in sorted(a):
        if i < 2:
            raise ValidationError(f"degrees must be >= 2, got {i}")
        if a[i] < 0:
            raise ValidationError(f"a_{i} = {a[i]} is negative")
        sings += [SingularityPrescription.of((i, 1))] * a[i]
    return validate(SingularCurveModel(base, tuple(sings)))


@dataclass(frozen=True)
class CurveReport:
    q: int
    g: int
    pi: int
    delta: int
    delta_x: int
    point_counts: tuple[int, ...]
    zeta_factor: tuple[int, ...]
    is_delta_optimal: str  # "yes", "no" or "unknown"
    is_maximal: bool
    bound_A: int
    bound_B: Optional[int]
    nqg: Optional[int]

    def to_dict(self) -> dict:
        d = dict(self.__dict__)
        d["point_counts"] = list(self.point_counts)
        d["zeta_factor"] = list(self.zeta_factor)
        return d

    @classmethod
    def from_dict(cls, d: Mapping) -> CurveReport:
        d = dict(d)
        d["point_counts"] = tuple(d["point_counts"])
        d["zeta_factor"] = tuple(d["zeta_factor"])
        return cls(**d)


def report(
    model: SingularCurveModel, horizon: int = DEFAULT_HORIZON, external_nqg: Optional[int] = None
) -> CurveReport:
    validate(model)
    q, g = model.q, model.g
    pi = arithmetic_genus(model)
    counts = tuple(point_counts(model, horizon))
    nqg = bounds.nq_or_none(q, g, external_nqg)
    if nqg is not None and model.base.n1 > nqg:
        raise ValidationError(f"base curve has {model.base.n1} rational points, more than N_q(g) = {nqg}")
    a = bounds.bound_A(bounds.GenusProfile(q, g, pi))
    b = None if nqg is None else nqg + pi - g
    if b is None:
        optimal = "unknown"
    else:
        optimal = "yes" if counts[0] == b else "no"
    return CurveReport(
        q=q,
        g=g,
        pi=pi,
        delta=pi - g,
        delta_x=delta_x(model),
        point_counts=counts,
        zeta_factor=singular_zeta_factor(model),
        is_delta_optimal=optimal,
        is_maximal=counts[0] == a,
        bound_A=a,
        bound_B=b,
        nqg=nqg,
    )


def model_from_pairs(base: SmoothZeta, prescriptions: Sequence[Sequence[tuple[int, int]]]) -> SingularCurveModel:
    return SingularCurveModel(base, tuple(SingularityPrescription.of(*p) for p in prescriptions))
