"""
Real-axis-fixing automorphisms of H and O, stored as the images of the generators.

An automorphism is fixed by the image of a basic triple: e1 = T(i1), e2 = T(i2) and, for
octonions, e4 = T(i4). The other images follow from the table:
    e3 = e1 e2,   e5 = e1 e4,   e6 = e2 e4,   e7 = e3 e4.
"""
from __future__ import annotations

from typing import Any, Sequence


import numpy as np
from numpy.typing import NDArray


from cd_analysis.algebra.CdNumber import CdNumber
from cd_analysis.exceptions import LevelMismatch


# Residual norm a Gram-Schmidt candidate must keep to be accepted.
# One always exists: the squared residuals of i2..i_{2^b-1} sum to at least 1.
MIN_RESIDUAL = 0.5


class RotationAutomorphism:
    """
    Attributes:
        level: b in {2, 3} (level 1 only carries the identity).
        images: images of i_1 .. i_{2^b-1}.
        matrix: 2^b x 2^b real matrix whose column j holds the coefficients of T(i_j).
    """

    __slots__ = ('level', 'images', 'matrix')

    def __init__(self, images: Sequence[CdNumber], level: int):
        if len(images) != 2 ** level - 1:
            raise ValueError(f"Level {level} needs {2 ** level - 1} images, got {len(images)}")
        self.level = level
        self.images = tuple(CdNumber.coerce(e).embed(level) for e in images)
        matrix = np.zeros((2 ** level, 2 ** level))
        matrix[0, 0] = 1.0
        for j, e in enumerate(self.images, start=1):
            matrix[:, j] = e.coeffs
        matrix.setflags(write=False)
        self.matrix = matrix

    @classmethod
    def identity(cls, level: int) -> RotationAutomorphism:
        return cls([CdNumber.basis(j, level) for j in range(1, 2 ** level)], level)

    @classmethod
    def from_matrix(cls, matrix: NDArray) -> RotationAutomorphism:
        n = matrix.shape[0]
        level = int(round(np.log2(n)))
        return cls([CdNumber(matrix[:, j], level) for j in range(1, n)], level)

    @classmethod
    def from_triple(cls, e1: CdNumber, e2: CdNumber, e4: CdNumber | None = None) -> RotationAutomorphism:
        level = 2 if e4 is None else 3
        e1, e2 = e1.embed(level), e2.embed(level)
        e3 = e1 * e2
        if level == 2:
            return cls([e1, e2, e3], level)
        e4 = e4.embed(level)
        return cls([e1, e2, e3, e4, e1 * e4, e2 * e4, e3 * e4], level)

    @classmethod
    def frame(cls, e1: CdNumber, level: int) -> RotationAutomorphism:
        """
        Deterministic automorphism with T(i1) = e1. The remaining triple members are the first
        candidates i2, i3, ... whose Gram-Schmidt residual against the images chosen so far
        has norm >= MIN_RESIDUAL. frame(i1) is the identity.
        """
        e1 = e1.embed(level)
        chosen = [CdNumber.basis(0, level), e1]
        e2 = _next_orthogonal(chosen, level)
        if level == 2:
            return cls.from_triple(e1, e2)
        e3 = e1 * e2
        e4 = _next_orthogonal(chosen + [e2, e3], level)
        return cls.from_triple(e1, e2, e4)

    def apply(self, w: Any) -> CdNumber:
        w = CdNumber.coerce(w)
        if w.level > self.level:
            raise LevelMismatch(f"Cannot apply a level-{self.level} automorphism to a level-{w.level} value")
        return CdNumber(self.matrix @ w.embed(self.level).coeffs, self.level)

    __call__ = apply

    def compose(self, other: RotationAutomorphism) -> RotationAutomorphism:
        """self o other."""
        if other.level != self.level:
            raise LevelMismatch(f"Levels {self.level} and {other.level} differ")
        return RotationAutomorphism.from_matrix(self.matrix @ other.matrix)

    def inverse(self) -> RotationAutomorphism:
        return RotationAutomorphism.from_matrix(self.matrix.T)

    def is_identity(self, tol: float = 0.0) -> bool:
        return bool(np.max(np.abs(self.matrix - np.eye(2 ** self.level))) <= tol)

    def determinant(self) -> float:
        return float(np.linalg.det(self.matrix))

    def defects(self) -> dict[str, float]:
        """
        Largest violations of the automorphism properties: orthonormality of the images and
        multiplicativity on generator pairs.
        """
        orth = float(np.max(np.abs(self.matrix.T @ self.matrix - np.eye(2 ** self.level))))
        mult = 0.0
        n = 2 ** self.level
        for j in range(1, n):
            for k in range(1, n):
                lhs = self.apply(CdNumber.basis(j, self.level) * CdNumber.basis(k, self.level))
                rhs = self.images[j - 1] * self.images[k - 1]
                mult = max(mult, (lhs - rhs).norm())
        return {"orthonormality": orth, "multiplicativity": mult}

    def to_json(self) -> dict:
        return {"level": self.level, "images": [e.to_json() for e in self.images]}

    def __repr__(self) -> str:
        return f"RotationAutomorphism(level={self.level}, images={[e.coeffs.tolist() for e in self.images]})"


def _next_orthogonal(chosen: list[CdNumber], level: int) -> CdNumber:
    basis = np.array([c.coeffs for c in chosen])
    for j in range(2, 2 ** level):
        candidate = np.zeros(2 ** level)
        candidate[j] = 1.0
        residual = candidate - basis.T @ (basis @ candidate)
        r = float(np.linalg.norm(residual))
        if r >= MIN_RESIDUAL:
            return CdNumber(residual / r, level)
    raise RuntimeError("No Gram-Schmidt candidate left; the chosen images are not orthonormal")
