"""Shared constructions for the two built-in geometries, used across tests."""

from fractions import Fraction

from nrgit.repspace import FactorSpec, build_rep

# Two points and a line in P^2, acted on by the Borel of SL(3).
# Torus modelled at true rank 2: coordinates (grading weight, complementary
# torus weight) with the complementary one-parameter subgroup diag(s,s^-2,s).
P2_WEIGHTS_61 = ((1, 1), (0, -2), (-1, 1))          # x, y, z

def rep_61():
    p2 = FactorSpec("proj", 2, 1, tuple(map(tuple, P2_WEIGHTS_61)))
    p2_dual = FactorSpec("proj_dual", 2, 1, tuple(map(tuple, P2_WEIGHTS_61)))
    return build_rep([p2, p2, p2_dual], gm_component=0)


# Three points and a line through [1:0:0], acted on by the two-parameter
# abelian unipotent with grading diag(t^2, t^-1, t^-1); torus rank 1.
def rep_62():
    p2 = FactorSpec("proj", 2, 1, ((2,), (-1,), (-1,)))
    p1_dual = FactorSpec("proj_dual", 1, 1, ((-1,), (-1,)))
    return build_rep([p2, p2, p2, p1_dual], gm_component=0)


def frac(a, b=1):
    return Fraction(a, b)
