"""Random singular-curve models that respect the closed-point budget."""

from hypothesis import strategies as st

from singcurve import gluing
from singcurve.zeta import closed_point_census, elliptic_zeta_from_count, genus0_zeta

BASES = {
    "P1/F2": lambda: genus0_zeta(2),
    "P1/F4": lambda: genus0_zeta(4),
    "E(4)/F2": lambda: elliptic_zeta_from_count(2, 4),
    "E(9)/F4": lambda: elliptic_zeta_from_count(4, 9),
}


def random_model(rng, base, max_degree=4, max_mult=3, max_sings=4):
    """Draw a budget-valid model with ``random.Random``-style ``rng``."""
    budget = dict(closed_point_census(base, max_degree))
    sings = []
    for _ in range(rng.randint(0, max_sings)):
        branches = []
        for _ in range(rng.randint(1, 3)):
            choices = [d for d in budget if budget[d] > 0]
            if not choices:
                break
            d = rng.choice(choices)
            budget[d] -= 1
            branches.append(gluing.BranchSpec(d, rng.randint(1, max_mult)))
        if not branches:
            break
        if sum(b.degree * b.multiplicity for b in branches) == 1:
            branches[0] = gluing.BranchSpec(1, 2)
        sings.append(gluing.SingularityPrescription(tuple(branches)))
    return gluing.validate(gluing.SingularCurveModel(base, tuple(sings)))


@st.composite
def models(draw, bases=tuple(BASES)):
    base = BASES[draw(st.sampled_from(bases))]()
    rng = draw(st.randoms(use_true_random=False))
    return random_model(rng, base)
