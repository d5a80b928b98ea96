"""
Signed multiplication table of the generators i_0 = 1, i_1, ..., i_{2^b-1} of the
Cayley-Dickson algebras R, C, H, O.

The table is generated once per level from the doubling product

    (a, b)(c, d) = (ac - d*b, da + bc*)

and checked against the fixed list of octonion products below. A mismatch is a construction
error, not a recoverable condition.
"""
from __future__ import annotations

from functools import lru_cache


import numpy as np
from numpy.typing import NDArray


MAX_LEVEL = 3

# (j, k) -> (sign, l) meaning i_j i_k = sign * i_l
REFERENCE_PRODUCTS: dict[tuple[int, int], tuple[int, int]] = {
    (1, 2): (1, 3),
    (1, 4): (1, 5),
    (2, 4): (1, 6),
    (3, 4): (1, 7),
    (1, 6): (-1, 7),
    (1, 7): (1, 6),
    (2, 5): (1, 7),
    (2, 7): (-1, 5),
    (3, 5): (-1, 6),
    (3, 6): (1, 5),
    (5, 6): (-1, 3),
    (5, 7): (1, 2),
    (6, 7): (-1, 1),
}


def _conj_vec(x: NDArray) -> NDArray:
    out = -x
    out[0] = x[0]
    return out


def _doubling_product(x: NDArray, y: NDArray) -> NDArray:
    """Recursive doubling product on raw coefficient vectors of equal power-of-two length."""
    n = len(x)
    if n == 1:
        return x * y
    half = n // 2
    a, b = x[:half], x[half:]
    c, d = y[:half], y[half:]
    first = _doubling_product(a, c) - _doubling_product(_conj_vec(d), b)
    second = _doubling_product(d, a) + _doubling_product(b, _conj_vec(c))
    return np.concatenate([first, second])


class GeneratorTable:
    """
    Multiplication table for one level b in {0, 1, 2, 3}.

    Attributes:
        level: The level b; the algebra has dim = 2^b generators.
        index: (dim, dim) int array, index[j, k] = l where i_j i_k = +-i_l.
        sign: (dim, dim) int array of +1/-1.
        tensor: (dim*dim, dim) float array; outer(a, b).ravel() @ tensor is the product a*b.
    """

    __slots__ = ('level', 'dim', 'index', 'sign', 'tensor')

    def __init__(self, level: int):
        if not 0 <= level <= MAX_LEVEL:
            raise ValueError(f"Level must be in 0..{MAX_LEVEL}, got {level}")
        self.level = level
        self.dim = dim = 2 ** level
        self.index = np.zeros((dim, dim), dtype=np.int64)
        self.sign = np.zeros((dim, dim), dtype=np.int64)
        tensor = np.zeros((dim, dim, dim))

        eye = np.eye(dim)
        for j in range(dim):
            for k in range(dim):
                product = _doubling_product(eye[j], eye[k])
                l = int(np.flatnonzero(product)[0])
                self.index[j, k] = l
                self.sign[j, k] = int(product[l])
                tensor[j, k, l] = product[l]

        self.tensor = tensor.reshape(dim * dim, dim)
        self.tensor.setflags(write=False)
        self._assert_reference_products()

    def _assert_reference_products(self) -> None:
        for (j, k), (sign, l) in REFERENCE_PRODUCTS.items():
            if max(j, k, l) >= self.dim:
                continue
            got = self.product(j, k)
            if got != (sign, l):
                raise RuntimeError(
                    f"Generator table at level {self.level} gives i{j}*i{k} = {got}, expected {(sign, l)}"
                )
        for k in range(1, self.dim):
            if self.product(k, k) != (-1, 0):
                raise RuntimeError(f"i{k}^2 != -1 at level {self.level}")

    def product(self, j: int, k: int) -> tuple[int, int]:
        """(sign, index) of i_j * i_k."""
        return int(self.sign[j, k]), int(self.index[j, k])

    def multiply(self, a: NDArray, b: NDArray) -> NDArray:
        """Bilinear product of two coefficient vectors of this level."""
        return np.outer(a, b).ravel() @ self.tensor

    @staticmethod
    @lru_cache(maxsize=None)
    def for_level(level: int) -> GeneratorTable:
        return GeneratorTable(level)
