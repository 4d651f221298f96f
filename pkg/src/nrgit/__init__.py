"""nrgit: exact-arithmetic toolkit for graded-unipotent GIT classification."""

from .linalg import AffineSubspace, QMat, Rat, nullspace, rank, rat, solve_affine

__all__ = [
    "AffineSubspace",
    "QMat",
    "Rat",
    "nullspace",
    "rank",
    "rat",
    "solve_affine",
]

__version__ = "0.1.0"
