"""Linearised representation data for products of projective-space factors.

A scenario's ambient variety is a product of projective spaces and duals;
the very ample line bundle is a product of O(twist_f) on the factors.  The
section space dual V carries an action of a split torus T-hat = T0 x G_m
recorded as one integer weight vector per homogeneous coordinate of each
factor.  The basis of V is the set of multi-indices over factor coordinates,
with additive weights; the distinguished G_m coordinate drives every limit
and grading computation downstream.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .linalg import QVec, rat, vec

MultiIndex = tuple[int, ...]


@dataclass(frozen=True)
class FactorSpec:
    """One projective-space factor of the ambient product.

    ``weights`` are the torus weight vectors of the *primal* homogeneous
    coordinates (length dim+1, each of length = torus rank).  A dual factor
    acts on row vectors by post-multiplication with the inverse group
    element, so its coordinate weights are the negated primal ones; the
    negation is applied by :func:`build_rep`.  ``twist`` is the power of
    O(1) on this factor and multiplies the factor's weights.
    """

    kind: str                      # "proj" | "proj_dual"
    dim: int                       # projective dimension, >= 1
    twist: int
    weights: tuple[QVec, ...]

    def __post_init__(self):
        if self.kind not in ("proj", "proj_dual"):
            raise ValueError(f"unknown factor kind {self.kind!r}")
        if self.dim < 1:
            raise ValueError("factor dim must be >= 1")
        if self.twist < 1:
            raise ValueError("twist must be >= 1")
        if len(self.weights) != self.dim + 1:
            raise ValueError("need one weight vector per homogeneous coordinate")
        ranks = {len(w) for w in self.weights}
        if len(ranks) != 1:
            raise ValueError("weight vectors of a factor must share one torus rank")

    @property
    def n_coords(self) -> int:
        return self.dim + 1

    def acted_weights(self) -> tuple[QVec, ...]:
        """Coordinate weights as the group actually acts on this factor."""
        sign = -1 if self.kind == "proj_dual" else 1
        return tuple(tuple(sign * self.twist * w for w in wv) for wv in self.weights)


@dataclass(frozen=True)
class WeightLadder:
    """Strictly increasing distinct G_m weights occurring on the basis."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.values:
            raise ValueError("empty weight ladder")
        if any(b <= a for a, b in zip(self.values, self.values[1:])):
            raise ValueError("ladder must be strictly increasing")

    @property
    def minimum(self) -> Fraction:
        return self.values[0]

    @property
    def maximum(self) -> Fraction:
        return self.values[-1]

    @property
    def is_trivial(self) -> bool:
        return len(self.values) == 1


@dataclass(frozen=True)
class Character:
    """Rational character of T-hat, as a vector in the character lattice."""

    value: QVec

    @classmethod
    def of(cls, values: Sequence) -> "Character":
        return cls(vec(values))

    def gm_part(self, gm_component: int) -> Fraction:
        return self.value[gm_component]

    def t0_part(self, gm_component: int) -> QVec:
        return tuple(v for i, v in enumerate(self.value) if i != gm_component)

    def scaled(self, c: int) -> "Character":
        return Character(tuple(rat(c) * v for v in self.value))


@dataclass(frozen=True)
class RepSpace:
    """Weight decomposition of V for the T-hat action on the product."""

    factors: tuple[FactorSpec, ...]
    gm_component: int
    basis: tuple[MultiIndex, ...] = field(init=False)
    weight: dict = field(init=False, repr=False)

    def __post_init__(self):
        ranks = {len(w) for f in self.factors for w in f.weights}
        if len(ranks) != 1:
            raise ValueError("inconsistent torus ranks across factors")
        rank_ = ranks.pop()
        if not 0 <= self.gm_component < rank_:
            raise ValueError("gm_component outside torus rank")
        acted = [f.acted_weights() for f in self.factors]
        basis = tuple(itertools.product(*[range(f.n_coords) for f in self.factors]))
        weight: dict[MultiIndex, QVec] = {}
        for mi in basis:
            total = [Fraction(0)] * rank_
            for f_idx, coord in enumerate(mi):
                wv = acted[f_idx][coord]
                for k in range(rank_):
                    total[k] += wv[k]
            weight[mi] = tuple(total)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "weight", weight)

    @property
    def torus_rank(self) -> int:
        return len(self.factors[0].weights[0])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def gm_weight(self, mi: MultiIndex) -> Fraction:
        return self.weight[mi][self.gm_component]

    def factor_gm_weights(self, f_idx: int) -> tuple[Fraction, ...]:
        """G_m weight of each coordinate of one factor, as acted."""
        acted = self.factors[f_idx].acted_weights()
        return tuple(w[self.gm_component] for w in acted)

    def distinct_weights(self) -> list[QVec]:
        seen = sorted(set(self.weight.values()))
        return seen

    def basis_index(self) -> dict[MultiIndex, int]:
        return {mi: i for i, mi in enumerate(self.basis)}


def build_rep(factors: Sequence[FactorSpec], gm_component: int = 0) -> RepSpace:
    """Assemble the product representation; weights add across factors."""
    if not factors:
        raise ValueError("need at least one factor")
    return RepSpace(tuple(factors), gm_component)


def weight_ladder(rep: RepSpace) -> WeightLadder:
    """Sorted distinct G_m components of all basis weights."""
    values = sorted({rep.gm_weight(mi) for mi in rep.basis})
    return WeightLadder(tuple(values))


def scale_linearisation(rep: RepSpace, c: int) -> RepSpace:
    """Replace L by L^(tensor c): same basis, every weight multiplied by c.

    The Veronese re-embedding is never materialized; all loci computed by
    this toolkit depend only on weight data and original coordinates, which
    the scaling leaves faithful.
    """
    if c < 1:
        raise ValueError("scale factor must be a positive integer")
    if c == 1:
        return rep
    scaled = tuple(
        FactorSpec(f.kind, f.dim, f.twist,
                   tuple(tuple(rat(c) * w for w in wv) for wv in f.weights))
        for f in rep.factors
    )
    return RepSpace(scaled, rep.gm_component)
