import cmath
import math


import mpmath
import numpy as np
import pytest


from cd_analysis.algebra.CdNumber import CdNumber
from cd_analysis.algebra.arithmetic import close, random_cd
from cd_analysis.exceptions import DivergenceRadius, LevelMismatch, OutOfDomain, SeedSingularity
from cd_analysis.qcx.ExtensionSpec import ExtensionSpec
from cd_analysis.qcx.checks import check_pseudo_conformal, check_q7
from cd_analysis.qcx.extension import (compose_extensions, eval_extension, eval_series_direct,
                                       extension_callable, product_extension, zero_surface)
from cd_analysis.rotor.rotation import find_partner
from cd_analysis.transcend.elementary import exp, sin
from cd_analysis.transcend.iterated import E_inv


EXP = ExtensionSpec.exp_sum([1.0], [1.0], name="exp")
EXP_SERIES = ExtensionSpec.power_series(lambda n: 1.0 / math.factorial(n), name="exp")
GEOMETRIC = ExtensionSpec.power_series(lambda n: 1.0, radius=1.0, name="1/(1-y)")


def i(j, level=3):
    return CdNumber.basis(j, level)


def non_holomorphic_quartic(a=1.0, q=0.5):
    def P(x):
        return ((x - a - q * 1j) * (x.conjugate() - a + q * 1j)
                * (x + a - q * 1j) * (x.conjugate() + a + q * 1j))
    return ExtensionSpec.from_callable(P, name="quartic")


def test_extension_of_exp_is_hypercomplex_exp(rng):
    for _ in range(50):
        z = random_cd(rng, 3)
        assert close(eval_extension(EXP, z), exp(z), 1e-12, 1e-12)


def test_restriction_to_complex_is_exact(rng):
    for spec in (EXP, EXP_SERIES, non_holomorphic_quartic()):
        for _ in range(20):
            y = complex(*rng.normal(size=2))
            assert eval_extension(spec, y) == CdNumber.from_complex(spec.seed_value(y), 3)


@pytest.mark.parametrize("level", [2, 3])
def test_spherical_flag_applies_E_before_the_seed(level, rng):
    linear = ExtensionSpec.exp_sum([1.0], [1.0], level=level)
    spherical = ExtensionSpec.exp_sum([1.0], [1.0], level=level, spherical=True)
    for _ in range(20):
        y = complex(*rng.normal(size=2))
        assert close(eval_extension(spherical, y), eval_extension(linear, y), 1e-12, 1e-12)
        z = random_cd(rng, level)
        assert close(eval_extension(spherical, E_inv(z)), eval_extension(linear, z), 1e-9, 1e-9)


@pytest.mark.parametrize("spec,scale", [(EXP_SERIES, 1.0), (GEOMETRIC, 0.25),
                                        (ExtensionSpec.power_series([1.0, 2.0, -0.5, 0.25]), 1.0)])
def test_direct_series_matches_extension(spec, scale, rng):
    for _ in range(1000 if spec is EXP_SERIES else 200):
        z = random_cd(rng, 3, scale)
        if spec.radius < math.inf and z.norm() >= 0.9:
            continue
        assert close(eval_series_direct(spec, z), eval_extension(spec, z), 1e-9, 1e-9)


def test_direct_series_errors():
    with pytest.raises(DivergenceRadius):
        eval_series_direct(GEOMETRIC, i(5) * 1.5)
    with pytest.raises(ValueError):
        eval_series_direct(EXP, i(5))
    with pytest.raises(OutOfDomain):
        eval_extension(GEOMETRIC, i(3) * 2.0)
    with pytest.raises(OutOfDomain):
        eval_extension(ExtensionSpec.exp_sum([1.0], [1.0], level=2), i(5))


def test_seed_singularity_is_reported():
    spec = ExtensionSpec.from_callable(lambda y: 1 / y, name="reciprocal")
    with pytest.raises(SeedSingularity):
        eval_extension(spec, 0.0)


def test_truncated_series_converge_monotonically():
    z = CdNumber([0.4, 0.3, -0.6, 0.2, 0.5, 0.0, -0.3, 0.1])
    target = eval_extension(EXP, z)
    errors = []
    for n in (4, 8, 12, 16, 20):
        partial = ExtensionSpec.power_series([1.0 / math.factorial(k) for k in range(n)])
        errors.append((eval_extension(partial, z) - target).norm())
    assert all(later < earlier for earlier, later in zip(errors, errors[1:]))
    assert errors[-1] < 1e-14


def test_zero_surface_of_real_point_is_the_point():
    assert zero_surface(2.5, n_samples=10) == [CdNumber.real(2.5, 2)]


@pytest.mark.parametrize("level", [2, 3])
def test_zero_surface_is_a_sphere_of_full_rank(level):
    z0 = CdNumber([0.5, 2.0])
    points = zero_surface(z0, n_samples=64, level=level, seed=3)
    coeffs = np.array([p.coeffs for p in points])
    assert np.allclose(coeffs[:, 0], 0.5)
    assert np.allclose(np.linalg.norm(coeffs[:, 1:], axis=1), 2.0)
    assert np.linalg.matrix_rank(coeffs[1:] - coeffs[0], tol=1e-9) == 2 ** level - 1


def test_seed_zero_spreads_over_its_surface():
    spec = ExtensionSpec.power_series([1.0, 0.0, 1.0], name="y^2+1")
    for level in (2, 3):
        for point in zero_surface(i(1, 1), n_samples=64, level=level):
            assert eval_extension(spec, point).norm() < 1e-10


def test_zero_surface_of_quaternion_example():
    for p in zero_surface(i(1, 2), n_samples=20, level=2):
        assert p.level == 2 and p.re == 0.0
        assert p.norm() == pytest.approx(1.0)


def test_pseudo_conformal_report_for_exp():
    report = check_pseudo_conformal(exp, i(1))
    assert report.antiholomorphy < 1e-8
    assert report.angle_change < 1e-6
    assert report.min_stretch > 0.1


def test_pseudo_conformal_detects_conjugation():
    report = check_pseudo_conformal(lambda z: z.conj(), CdNumber([0.3, 0.2, 0.1, 0.5]))
    assert report.antiholomorphy == pytest.approx(1.0, abs=1e-8)


def test_pseudo_conformal_detects_vanishing_derivative():
    report = check_pseudo_conformal(lambda z: z * z, CdNumber.real(0.0, 2))
    assert report.min_stretch < 1e-12


def test_q7_holds_for_exp(rng):
    for _ in range(50):
        z = random_cd(rng, 3)
        h = complex(*rng.normal(size=2))
        assert check_q7(EXP, z, find_partner(z).embed(1), h) < 1e-6


def test_q7_fails_for_non_holomorphic_seed():
    z = CdNumber([0.3, 0.0, 0.5, 0.0, 0.6, 0.0, 0.0, 0.0])
    residual = check_q7(non_holomorphic_quartic(), z, find_partner(z).embed(1), 1j)
    assert residual > 0.1


def test_q7_zero_direction_and_errors():
    z = CdNumber([0.3, 0.0, 0.5, 0.0])
    assert check_q7(EXP, z, find_partner(z).embed(1), 0.0) == 0.0
    with pytest.raises(OutOfDomain):
        check_q7(EXP, z, find_partner(z).embed(1), i(2, 2))


def test_identity_after_seed_is_the_seed(rng):
    identity = ExtensionSpec.power_series([0.0, 1.0], name="id")
    composed = compose_extensions(EXP, identity)
    for _ in range(20):
        z = random_cd(rng, 3)
        assert close(eval_extension(composed, z), eval_extension(EXP, z), 1e-13, 1e-13)


def test_exp_of_scaled_argument_passes_q7(rng):
    composed = compose_extensions(ExtensionSpec.power_series([0.0, 0.7]), EXP)
    for _ in range(20):
        z = random_cd(rng, 3)
        assert check_q7(composed, z, find_partner(z).embed(1), complex(*rng.normal(size=2))) < 1e-6
        assert close(eval_extension(composed, z), exp(z * 0.7), 1e-12, 1e-12)


def test_log_after_exp_is_identity_on_a_small_disk(rng):
    log = ExtensionSpec.from_callable(cmath.log, name="log")
    composed = compose_extensions(EXP, log)
    for _ in range(50):
        z = random_cd(rng, 3, 0.2)
        assert close(eval_extension(composed, z), z, 1e-12, 1e-12)


def test_product_with_one_is_the_factor(rng):
    one = ExtensionSpec.power_series([1.0], name="1")
    product = product_extension(EXP, one)
    for _ in range(20):
        z = random_cd(rng, 3)
        assert close(eval_extension(product, z), eval_extension(EXP, z), 1e-14, 1e-14)


def test_sin_times_cos_is_half_sin_of_double(rng):
    sine = ExtensionSpec.from_callable(cmath.sin, name="sin")
    cosine = ExtensionSpec.from_callable(cmath.cos, name="cos")
    product = product_extension(sine, cosine)
    for _ in range(50):
        z = random_cd(rng, 3)
        assert close(eval_extension(product, z), sin(z * 2.0) * 0.5, 1e-11, 1e-11)


def test_product_needs_one_family():
    with pytest.raises(ValueError):
        product_extension(EXP, ExtensionSpec.exp_sum([1.0], [1.0], center=1.0))
    with pytest.raises(LevelMismatch):
        product_extension(EXP, ExtensionSpec.exp_sum([1.0], [1.0], level=2))


def test_weierstrass_partial_products_approach_reciprocal_gamma():
    z = CdNumber([0.3, 0.0, 0.4, 0.0])
    target = eval_extension(
        ExtensionSpec.from_callable(lambda y: complex(mpmath.rgamma(1 + y)), level=2), z)
    errors = []
    spec = ExtensionSpec.exp_sum([1.0], [float(mpmath.euler)], level=2)
    factors = 0
    for K in (4, 16, 64):
        for k in range(factors + 1, K + 1):
            factor = ExtensionSpec.from_callable(
                lambda y, k=k: (1 + y / k) * cmath.exp(-y / k), level=2)
            spec = product_extension(spec, factor)
        factors = K
        errors.append((eval_extension(spec, z) - target).norm())
    assert errors[0] > errors[1] > errors[2]
    assert errors[2] < 1e-2


def test_extension_callable_wraps_eval(rng):
    f = extension_callable(EXP)
    z = random_cd(rng, 3)
    assert f(z) == eval_extension(EXP, z)
    assert f.__name__ == "exp"
