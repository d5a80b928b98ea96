import json
import math


from hypothesis import given
import hypothesis.strategies as st
import numpy as np
import pytest


from cd_analysis.algebra.CdNumber import CdNumber
from cd_analysis.algebra.GeneratorTable import GeneratorTable, REFERENCE_PRODUCTS
from cd_analysis.algebra.arithmetic import (
    associator, close, conj, conj_formula, embed, im, inverse, mul, norm, proj, proj_formula, re,
    random_cd,
)
from cd_analysis.exceptions import EmbeddingError, IndexOutOfRange, ZeroArgument


def i(j, level=3):
    return CdNumber.basis(j, level)


coeff = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)
quaternions = st.lists(coeff, min_size=4, max_size=4).map(lambda c: CdNumber(c, 2))
octonions = st.lists(coeff, min_size=8, max_size=8).map(lambda c: CdNumber(c, 3))


@pytest.mark.parametrize("pair, expected", list(REFERENCE_PRODUCTS.items()))
def test_reference_products_reproduced_exactly(pair, expected):
    sign, l = expected
    assert i(pair[0]) * i(pair[1]) == sign * i(l)


def test_generator_squares_and_anticommutation():
    table = GeneratorTable.for_level(3)
    for j in range(1, 8):
        assert table.product(j, j) == (-1, 0)
        for k in range(1, 8):
            if j != k:
                s1, l1 = table.product(j, k)
                s2, l2 = table.product(k, j)
                assert l1 == l2 and s1 == -s2


def test_lower_tables_are_subtables():
    full = GeneratorTable.for_level(3)
    for level in (1, 2):
        sub = GeneratorTable.for_level(level)
        n = 2 ** level
        assert np.array_equal(sub.index, full.index[:n, :n])
        assert np.array_equal(sub.sign, full.sign[:n, :n])


def test_mul_examples():
    assert mul(i(1), i(2)) == i(3)
    assert mul(i(5), i(6)) == -i(3)
    z = CdNumber([1, 2, 3, 4, 5, 6, 7, 8])
    assert mul(1, z) == z


def test_conj_examples():
    assert conj(CdNumber([1, 2])) == CdNumber([1, -2])
    assert conj(3.5) == CdNumber.real(3.5)


def test_norm_re_im_examples():
    assert norm(CdNumber([1, 1, 1, 1])) == 2.0
    assert re(CdNumber([3, 0, -4, 0])) == 3.0
    assert im(CdNumber([3, 0, -4, 0])) == CdNumber([0, 0, -4, 0])


def test_inverse_examples():
    assert inverse(i(1, 1)) == -i(1, 1)
    assert inverse(2.0) == CdNumber.real(0.5)
    with pytest.raises(ZeroArgument):
        inverse(CdNumber([0, 0, 0, 0]))


def test_proj_examples():
    assert proj(CdNumber([2, 0, 0, 5]), 3) == 5.0
    assert proj(i(7), 0) == 0.0
    with pytest.raises(IndexOutOfRange):
        proj(CdNumber([1, 2]), 2)


def test_embed_examples():
    assert embed(CdNumber([1, 1]), 3) == CdNumber([1, 1, 0, 0, 0, 0, 0, 0])
    assert embed(i(2, 2), 3) ** 2 == CdNumber.real(-1.0, 3)
    with pytest.raises(EmbeddingError):
        embed(i(5), 2)
    assert embed(CdNumber([1, 2, 0, 0]), 1) == CdNumber([1, 2])


@given(coeff, coeff, coeff, coeff)
def test_embedding_commutes_with_multiplication(a, b, c, d):
    x, y = CdNumber([a, b]), CdNumber([c, d])
    assert close(embed(x * y, 3), embed(x, 3) * embed(y, 3))
    assert close(x * y, CdNumber.from_complex(complex(a, b) * complex(c, d)), 1e-12, 1e-12)


@given(quaternions, quaternions, quaternions)
def test_quaternions_associate(a, b, c):
    scale = max(1.0, a.norm() * b.norm() * c.norm())
    assert associator(a, b, c).norm() <= 1e-12 * scale


@given(octonions, octonions)
def test_octonions_alternative(z, y):
    scale = max(1.0, z.norm() ** 2 * y.norm())
    assert (z * (z * y) - (z * z) * y).norm() <= 1e-12 * scale
    assert ((y * z) * z - y * (z * z)).norm() <= 1e-12 * scale


def test_octonions_are_not_associative():
    assert associator(i(1), i(2), i(4)).norm() == pytest.approx(2.0)


@given(octonions, octonions)
def test_conj_reverses_products(a, b):
    assert close(conj(a * b), conj(b) * conj(a), 1e-12, 1e-12 * max(1.0, a.norm() * b.norm()))


@given(octonions, octonions)
def test_norm_is_multiplicative(a, b):
    assert math.isclose(norm(a * b), norm(a) * norm(b), rel_tol=1e-12, abs_tol=1e-12)


@given(octonions)
def test_z_times_conj_is_norm_squared(z):
    product = z * conj(z)
    assert close(product, CdNumber.real(z.norm2(), 3), 1e-12, 1e-12)


def test_closed_forms_match_coefficient_definitions(rng):
    for _ in range(10_000 // 8):
        for level in (2, 3):
            z = random_cd(rng, level)
            assert close(conj_formula(z), conj(z), 1e-12, 1e-14)
            assert abs(((z + conj_formula(z)) / 2).re - re(z)) <= 1e-12 * max(1.0, z.norm())
        z = random_cd(rng, 3)
        for j in range(8):
            assert abs(proj_formula(z, j) - proj(z, j)) <= 1e-12 * max(1.0, z.norm())


def test_closed_forms_reject_complex_level():
    with pytest.raises(ValueError):
        conj_formula(CdNumber([1, 2]))


@given(octonions)
def test_inverse_multiplies_back(z):
    if z.norm() < 1e-3:
        return
    one = CdNumber.real(1.0, 3)
    assert close(z * inverse(z), one, 1e-12, 1e-12)
    assert close(inverse(z) * z, one, 1e-12, 1e-12)


def test_mixed_levels_auto_embed():
    q = CdNumber([0, 0, 1, 0])
    c = CdNumber([0, 1])
    assert (c * q) == CdNumber([0, 0, 0, 1])
    assert (c * q).level == 2
    assert (1 + i(4)).level == 3


def test_json_round_trip_uses_shortest_repr():
    z = CdNumber([0.1, -2.5, 1e-300, 3.0])
    text = json.dumps(z.to_json())
    assert "0.1" in text and "1e-300" in text
    assert CdNumber.from_json(text) == z


def test_values_are_immutable():
    z = CdNumber([1, 2])
    with pytest.raises(AttributeError):
        z.level = 3
    with pytest.raises(ValueError):
        z.coeffs[0] = 5.0
