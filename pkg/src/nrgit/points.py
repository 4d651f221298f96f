"""Points of the factor product, t->0 limits, jet truncations, basin loci.

A point normally lives as a tuple of nonzero factor coordinate vectors; its
embedded vector in the product representation (the multi-index products) is
computed on demand and cached.  Jet truncations at intermediate weight levels
are usually not decomposable, so they are carried in embedded-only form.
Projective equality is always decided by vanishing cross products, never by
normalising a chosen coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .linalg import QVec, is_zero_vec, proportional, vec
from .repspace import RepSpace


@dataclass(frozen=True)
class SupportProfile:
    """G_m weight data of a point's embedded support."""

    min_weight: Fraction
    max_weight: Fraction
    present_weights: frozenset


class ProjPoint:
    """A point of the product (factor form) or of the ambient P(V) (embedded).

    ``factors`` is None exactly for embedded-only points such as truncated
    jets.  The embedded vector is cached after first use; instances are
    immutable, so the benign cache fill is safe under concurrent reads.
    """

    __slots__ = ("factors", "_embedded", "_support")

    def __init__(self, factors: Optional[Sequence[Sequence]] = None,
                 embedded: Optional[Sequence] = None):
        if factors is None and embedded is None:
            raise ValueError("need factor coordinates or an embedded vector")
        fct = None
        if factors is not None:
            fct = tuple(vec(f) for f in factors)
            for f in fct:
                if is_zero_vec(f):
                    raise ValueError("factor coordinate vectors must be nonzero")
        object.__setattr__(self, "factors", fct)
        emb = vec(embedded) if embedded is not None else None
        if emb is not None and is_zero_vec(emb):
            raise ValueError("embedded vector must be nonzero")
        object.__setattr__(self, "_embedded", emb)
        object.__setattr__(self, "_support", None)

    def __setattr__(self, *a):  # immutability guard
        raise AttributeError("ProjPoint is immutable")

    @property
    def is_decomposable(self) -> bool:
        return self.factors is not None

    def embedded(self, rep: RepSpace) -> QVec:
        if self._embedded is not None:
            return self._embedded
        coords = []
        for mi in rep.basis:
            prod = Fraction(1)
            for f_idx, c_idx in enumerate(mi):
                prod *= self.factors[f_idx][c_idx]
                if prod == 0:
                    break
            coords.append(prod)
        emb = tuple(coords)
        object.__setattr__(self, "_embedded", emb)
        return emb

    def support(self, rep: RepSpace) -> SupportProfile:
        if self._support is not None:
            return self._support
        emb = self.embedded(rep)
        present = frozenset(rep.gm_weight(mi) for mi, x in zip(rep.basis, emb) if x != 0)
        prof = SupportProfile(min(present), max(present), present)
        object.__setattr__(self, "_support", prof)
        return prof

    def projectively_equal(self, other: "ProjPoint", rep: RepSpace) -> bool:
        if self.factors is not None and other.factors is not None:
            if len(self.factors) != len(other.factors):
                return False
            return all(proportional(a, b) for a, b in zip(self.factors, other.factors))
        return proportional(self.embedded(rep), other.embedded(rep))

    def __repr__(self) -> str:
        if self.factors is not None:
            return f"ProjPoint(factors={self.factors!r})"
        return f"ProjPoint(embedded={self._embedded!r})"


def point(*factors) -> ProjPoint:
    return ProjPoint(factors=factors)


def limit_point(rep: RepSpace, x: ProjPoint) -> ProjPoint:
    """The t->0 limit under the grading G_m: keep the minimal present weight.

    In the embedding, t.v scales the weight-w component by t^w, so after
    projective rescaling only the lowest present weight survives as t->0.
    For a decomposable point the minimal component of a tensor product is
    the tensor product of the per-factor minimal components, so the limit
    is returned in factor form; embedded-only inputs stay embedded.
    Idempotent by construction.
    """
    if x.factors is not None:
        new_factors = []
        for f_idx, fvec in enumerate(x.factors):
            wts = rep.factor_gm_weights(f_idx)
            m = min(w for w, c in zip(wts, fvec) if c != 0)
            new_factors.append(tuple(c if w == m else Fraction(0) for w, c in zip(wts, fvec)))
        return ProjPoint(factors=new_factors)
    emb = x.embedded(rep)
    m = x.support(rep).min_weight
    proj = tuple(c if rep.gm_weight(mi) == m else Fraction(0)
                 for mi, c in zip(rep.basis, emb))
    return ProjPoint(embedded=proj)


def truncate_jet(rep: RepSpace, x: ProjPoint, r) -> Optional[ProjPoint]:
    """Projection of the embedded vector to weight components <= r.

    Returns None (undefined) when r is below the support, the point itself
    when r covers the whole support, and the t->0 limit in factor form at
    r = minimal support weight.  Intermediate truncations are embedded-only
    points of the ambient P(V); they are generally not on the product.
    """
    prof = x.support(rep)
    if r < prof.min_weight:
        return None
    if r >= prof.max_weight:
        return x
    if r == prof.min_weight or max(w for w in prof.present_weights if w <= r) == prof.min_weight:
        return limit_point(rep, x)
    emb = x.embedded(rep)
    proj = tuple(c if rep.gm_weight(mi) <= r else Fraction(0)
                 for mi, c in zip(rep.basis, emb))
    return ProjPoint(embedded=proj)


def in_min_weight_space(rep: RepSpace, x: ProjPoint) -> bool:
    """Fixed points where G_m acts on the fibre with the minimal weight."""
    prof = x.support(rep)
    ladder_min = min(rep.gm_weight(mi) for mi in rep.basis)
    return prof.present_weights == frozenset({ladder_min})


def in_min_basin(rep: RepSpace, x: ProjPoint) -> bool:
    """Points flowing into the minimal fixed locus as t->0."""
    ladder_min = min(rep.gm_weight(mi) for mi in rep.basis)
    return x.support(rep).min_weight == ladder_min


def in_capped_basin(rep: RepSpace, x: ProjPoint, r) -> bool:
    """Basin points whose t->infinity limit weight is at most r.

    The t->infinity limit projects onto the maximal present weight, so the
    condition is: in the basin and max support weight <= r.
    """
    return in_min_basin(rep, x) and x.support(rep).max_weight <= r
