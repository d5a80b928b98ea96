"""
Immutable element of a Cayley-Dickson algebra of level 0..3 (R, C, H, O).

Coefficient j multiplies generator i_j; coefficient 0 is the real part. Mixed-level arithmetic
embeds the lower level into the higher one by zero padding, which is a subalgebra embedding.
"""
from __future__ import annotations

import json
import numbers
from typing import Any, Iterable


import numpy as np
from numpy.typing import NDArray


from .GeneratorTable import GeneratorTable, MAX_LEVEL
from cd_analysis.exceptions import EmbeddingError, IndexOutOfRange, ZeroArgument
from config.config import ZERO_EPSILON


_LEVEL_OF_DIM = {1: 0, 2: 1, 4: 2, 8: 3}


class CdNumber:
    """
    Attributes:
        level: b in {0, 1, 2, 3}.
        coeffs: read-only float64 array of length 2^b.

    Examples:
        >>> i1, i2 = CdNumber.basis(1, 2), CdNumber.basis(2, 2)
        >>> i1 * i2
        CdNumber(level=2, coeffs=[0.0, 0.0, 0.0, 1.0])
        >>> abs(CdNumber([1, 1, 1, 1]))
        2.0
    """

    __slots__ = ('level', 'coeffs')

    def __init__(self, coeffs: Iterable[float] | NDArray, level: int | None = None):
        arr = np.array(coeffs, dtype=np.float64).reshape(-1)
        if level is None:
            if len(arr) not in _LEVEL_OF_DIM:
                raise ValueError(f"Coefficient count must be 1, 2, 4 or 8, got {len(arr)}")
            level = _LEVEL_OF_DIM[len(arr)]
        elif not 0 <= level <= MAX_LEVEL:
            raise ValueError(f"Level must be in 0..{MAX_LEVEL}, got {level}")
        if len(arr) < 2 ** level:
            arr = np.concatenate([arr, np.zeros(2 ** level - len(arr))])
        elif len(arr) > 2 ** level:
            raise ValueError(f"{len(arr)} coefficients do not fit level {level}")
        arr.setflags(write=False)
        object.__setattr__(self, 'level', level)
        object.__setattr__(self, 'coeffs', arr)

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("CdNumber is immutable")

    def __reduce__(self):
        return (CdNumber, (self.coeffs.tolist(), self.level))

    # Constructors

    @classmethod
    def basis(cls, j: int, level: int = MAX_LEVEL) -> CdNumber:
        """The generator i_j at the given level (i_0 = 1)."""
        if not 0 <= j < 2 ** level:
            raise IndexOutOfRange(f"Generator i{j} does not exist at level {level}")
        c = np.zeros(2 ** level)
        c[j] = 1.0
        return cls(c, level)

    @classmethod
    def real(cls, value: float, level: int = 0) -> CdNumber:
        return cls([float(value)], level)

    @classmethod
    def from_complex(cls, value: complex, level: int = 1) -> CdNumber:
        return cls([value.real, value.imag], max(level, 1))

    @classmethod
    def coerce(cls, value: Any, level: int | None = None) -> CdNumber:
        """
        Turn reals, complex numbers, coefficient sequences or CdNumbers into a CdNumber.
        If level is given, the result is embedded into at least that level.
        """
        if isinstance(value, CdNumber):
            out = value
        elif isinstance(value, numbers.Real):
            out = cls.real(float(value))
        elif isinstance(value, numbers.Complex):
            out = cls.from_complex(complex(value))
        else:
            out = cls(value)
        if level is not None and level > out.level:
            out = out.embed(level)
        return out

    @classmethod
    def from_json(cls, data: str | dict) -> CdNumber:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["coeffs"], int(data["level"]))

    # Components

    @property
    def dim(self) -> int:
        return 2 ** self.level

    @property
    def re(self) -> float:
        return float(self.coeffs[0])

    @property
    def im(self) -> CdNumber:
        c = self.coeffs.copy()
        c[0] = 0.0
        return CdNumber(c, self.level)

    def proj(self, j: int) -> float:
        if not 0 <= j < self.dim:
            raise IndexOutOfRange(f"Projection index {j} out of range for level {self.level}")
        return float(self.coeffs[j])

    def conj(self) -> CdNumber:
        c = -self.coeffs
        c[0] = self.coeffs[0]
        return CdNumber(c, self.level)

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def norm2(self) -> float:
        return float(self.coeffs @ self.coeffs)

    def inverse(self) -> CdNumber:
        n2 = self.norm2()
        if np.sqrt(n2) <= ZERO_EPSILON:
            raise ZeroArgument("Cannot invert zero")
        return CdNumber(self.conj().coeffs / n2, self.level)

    def embed(self, target_level: int) -> CdNumber:
        """
        Natural embedding into level target_level. Embedding down is allowed only when the
        dropped coefficients are zero.
        """
        if target_level == self.level:
            return self
        if target_level > self.level:
            return CdNumber(self.coeffs, target_level)
        if target_level < 0 or np.any(self.coeffs[2 ** target_level:] != 0.0):
            raise EmbeddingError(f"{self} does not lie in level {target_level}")
        return CdNumber(self.coeffs[:2 ** target_level], target_level)

    def is_real(self, tol: float = 0.0) -> bool:
        return bool(np.all(np.abs(self.coeffs[1:]) <= tol))

    def min_level(self) -> int:
        """Smallest level containing this value."""
        nonzero = np.flatnonzero(self.coeffs)
        if len(nonzero) == 0:
            return 0
        return int(np.ceil(np.log2(nonzero[-1] + 1)))

    def to_complex(self) -> complex:
        if self.level > 1 and np.any(self.coeffs[2:] != 0.0):
            raise EmbeddingError(f"{self} is not complex")
        return complex(self.coeffs[0], self.coeffs[1] if self.level >= 1 else 0.0)

    def to_json(self) -> dict:
        return {"level": self.level, "coeffs": [float(c) for c in self.coeffs]}

    # Arithmetic

    @staticmethod
    def _pair(a: CdNumber, b: Any) -> tuple[CdNumber, CdNumber]:
        b = CdNumber.coerce(b)
        level = max(a.level, b.level)
        return a.embed(level), b.embed(level)

    def __add__(self, other: Any) -> CdNumber:
        a, b = self._pair(self, other)
        return CdNumber(a.coeffs + b.coeffs, a.level)

    __radd__ = __add__

    def __sub__(self, other: Any) -> CdNumber:
        a, b = self._pair(self, other)
        return CdNumber(a.coeffs - b.coeffs, a.level)

    def __rsub__(self, other: Any) -> CdNumber:
        a, b = self._pair(self, other)
        return CdNumber(b.coeffs - a.coeffs, a.level)

    def __neg__(self) -> CdNumber:
        return CdNumber(-self.coeffs, self.level)

    def __pos__(self) -> CdNumber:
        return self

    def __mul__(self, other: Any) -> CdNumber:
        if isinstance(other, numbers.Real):
            return CdNumber(self.coeffs * float(other), self.level)
        a, b = self._pair(self, other)
        return CdNumber(GeneratorTable.for_level(a.level).multiply(a.coeffs, b.coeffs), a.level)

    def __rmul__(self, other: Any) -> CdNumber:
        if isinstance(other, numbers.Real):
            return CdNumber(self.coeffs * float(other), self.level)
        return CdNumber.coerce(other).__mul__(self)

    def __truediv__(self, other: Any) -> CdNumber:
        """Right division z * w^{-1}."""
        if isinstance(other, numbers.Real):
            if abs(other) <= ZERO_EPSILON:
                raise ZeroArgument("Division by zero")
            return CdNumber(self.coeffs / float(other), self.level)
        return self * CdNumber.coerce(other).inverse()

    def __rtruediv__(self, other: Any) -> CdNumber:
        return CdNumber.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> CdNumber:
        """Integer powers. Powers of one element associate in every alternative algebra."""
        if not isinstance(n, numbers.Integral):
            raise TypeError("Use transcend.power for non-integer exponents")
        if n < 0:
            return self.inverse() ** (-n)
        result, base = CdNumber.real(1.0, self.level), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __abs__(self) -> float:
        return self.norm()

    def __eq__(self, other: Any) -> bool:
        try:
            a, b = self._pair(self, other)
        except (TypeError, ValueError):
            return NotImplemented
        return bool(np.array_equal(a.coeffs, b.coeffs))

    def __hash__(self) -> int:
        return hash(tuple(self.embed(self.min_level()).coeffs.tolist()))

    def __repr__(self) -> str:
        return f"CdNumber(level={self.level}, coeffs={self.coeffs.tolist()})"

    def __str__(self) -> str:
        terms = [f"{self.coeffs[0]:g}"]
        for j, c in enumerate(self.coeffs[1:], start=1):
            if c != 0.0:
                terms.append(f"{c:+g}*i{j}")
        return " ".join(terms)
