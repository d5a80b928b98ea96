import math


import mpmath
import pytest


from cd_analysis.algebra.CdNumber import CdNumber
from cd_analysis.algebra.arithmetic import close
from cd_analysis.exceptions import DomainOfConvergence, EmptyStrip, OutOfDomain
from cd_analysis.xform.BromwichLine import BromwichLine
from cd_analysis.xform.Original import Original
from cd_analysis.xform.TransformSpec import TransformSpec, flip_first
from cd_analysis.xform.checks import diff_under_integral_check, quasi_regularity_check, symmetry_report
from cd_analysis.xform.inversion import invert, invert_mellin
from cd_analysis.xform.pairs import (PAIRS, gamma_mellin, gaussian, laplace_pair_check, logistic,
                                     shifted_exponential, two_sided_exponential, unit_step)
from cd_analysis.xform.transforms import image, laplace, laplace_two_sided, mellin, transform


def i(j, level=2):
    return CdNumber.basis(j, level)


def q(*coeffs):
    return CdNumber(list(coeffs) + [0.0] * (4 - len(coeffs)), 2)


OCTONION_PROBE = CdNumber([0.4, 0.3, -0.2, 0.1, 0.25, -0.15, 0.05, 0.2], 3)


@pytest.mark.parametrize("pair,probes", [
    (unit_step(), [1.0 + 0.5j, q(1.0, 0.5, 0.3, -0.2), q(2.0, -1.0, 0.0, 0.7)]),
    (shifted_exponential(-1.0), [0.5 + 2j, q(0.0, 0.4, -0.3, 0.6)]),
    (gaussian(), [0.3 + 0.4j, q(0.5, 0.7, -0.2, 0.4), q(-1.0, 0.2, 0.2, 0.2)]),
    (gaussian(2.0), [q(0.5, -0.3, 0.8, 0.1)]),
    (two_sided_exponential(), [0.3 + 0.4j, q(-0.4, 0.2, 0.5, -0.1)]),
    (logistic(), [-0.5 + 0.3j, q(-0.5, 0.3, 0.2, 0.1), q(-0.25, -0.6, 0.0, 0.4)]),
    (gamma_mellin(), [1.5 + 0.5j, q(1.5, 0.4, 0.3, 0.0), q(0.7, 0.1, -0.5, 0.2)]),
    (gamma_mellin(2.0), [q(1.2, 0.3, -0.4, 0.5)]),
])
def test_closed_form_pairs(pair, probes):
    assert laplace_pair_check(pair, probes) < 1e-7


def test_octonion_probes():
    spec = TransformSpec(level=3)
    assert laplace_pair_check(gaussian(), [OCTONION_PROBE], spec) < 1e-7
    assert laplace_pair_check("step", [OCTONION_PROBE + 1.0], spec) < 1e-7


def test_gamma_matches_mpmath():
    p = 1.5 + 0.5j
    value = mellin(gamma_mellin().original, p, TransformSpec(level=1))
    assert close(value, complex(mpmath.gamma(p)), 1e-8, 1e-10)


def test_pair_registry():
    assert set(PAIRS) >= {"step", "gaussian", "logistic", "gamma"}
    with pytest.raises(ValueError):
        laplace_pair_check("nonsense", [1.0])


def test_zero_original_has_zero_image():
    zero = Original(func=lambda t: 0.0, s0=-math.inf, s1=math.inf, support="two_sided")
    assert transform(zero, q(0.3, 0.4, -0.2, 0.1)) == CdNumber.real(0.0, 2)


def test_strip_violations():
    with pytest.raises(DomainOfConvergence):
        laplace(shifted_exponential(1.0).original, 0.5)
    with pytest.raises(DomainOfConvergence):
        laplace_two_sided(logistic().original, 0.2 + 0.1j)
    with pytest.raises(EmptyStrip):
        laplace_two_sided(Original(func=math.exp, s0=1.0, s1=0.5, support="two_sided"), 0.7)
    with pytest.raises(ValueError):
        mellin(unit_step().original, 1.0)
    with pytest.raises(ValueError):
        laplace(gamma_mellin().original, 1.0)


def test_original_validation():
    with pytest.raises(ValueError):
        Original(func=math.exp, support="left")
    with pytest.raises(ValueError):
        Original(func=math.exp, bound=0.0)
    with pytest.raises(ValueError):
        Original(func=math.exp, s0=0.5).validate()
    assert Original(func=math.exp, s0=1.0).validate().growth_violation() <= 1.0 + 1e-12


def test_mellin_original_swaps_exponents():
    f = gamma_mellin().original.as_two_sided()
    assert (f.s0, f.s1, f.support) == (-math.inf, 0.0, "two_sided")
    assert f(0.0) == CdNumber.real(math.exp(-1.0))


def test_linearity_across_strips():
    a = 0.5
    orig = Original(func=lambda t: math.exp(a * t) - 1.0, s0=a, name="exp(at) - 1")
    p = q(1.2, 0.3, 0.0, 0.4)
    expected = (p - a).inverse() - p.inverse()
    assert close(laplace(orig, p), expected, 1e-8, 1e-10)


def test_spherical_kernel_agrees_on_complex_slice():
    orig = gaussian().original
    for p in (0.3 + 0.4j, -0.8 + 1.1j):
        linear = transform(orig, p, TransformSpec())
        spherical = transform(orig, p, TransformSpec(kernel="spherical"))
        assert close(linear, spherical, 1e-10, 1e-12)


def test_spherical_kernel_differs_off_the_slice():
    p = q(0.3, 0.4, 0.5, 0.2)
    orig = gaussian().original
    assert (transform(orig, p) - transform(orig, p, TransformSpec(kernel="spherical"))).norm() > 1e-3


def test_image_is_holomorphic_on_the_complex_slice():
    orig = unit_step().original
    p = CdNumber.from_complex(1.0 + 0.5j, 2)
    d_one = transform(orig, p, direction=1.0)
    d_i = transform(orig, p, direction=i(1))
    assert close(d_i, i(1) * d_one, 1e-8, 1e-10)
    assert close(d_one, -(p.inverse() * p.inverse()), 1e-8, 1e-10)


def test_derivative_under_the_integral():
    assert diff_under_integral_check(unit_step().original, q(1.0, 0.5, 0.3, -0.2), q(0.2, 0.1, 0.7, 0.3)) < 1e-6
    assert diff_under_integral_check(gaussian().original, q(0.3, 0.2, -0.4, 0.1), i(2)) < 1e-6
    assert diff_under_integral_check(gaussian().original, q(0.3, 0.2, -0.4, 0.1), 0.0) == 0.0
    with pytest.raises(ValueError):
        diff_under_integral_check(gaussian().original, 0.5, 1.0, TransformSpec(kernel="spherical"))


def test_symmetries_of_an_even_real_original():
    probes = [q(0.3, 0.2, 0.4, 0.1), q(-0.5, 0.6, -0.1, 0.3)]
    spherical = symmetry_report(image(gaussian().original, TransformSpec(kernel="spherical")), probes,
                                TransformSpec(kernel="spherical"))
    assert spherical.conj_sym < 1e-8
    assert spherical.spherical_conj_sym < 1e-8
    assert spherical.even_sym < 1e-8
    linear = symmetry_report(image(gaussian().original), probes)
    assert linear.conj_sym < 1e-8
    assert linear.even_sym < 1e-8
    assert linear.to_json()["probes"] == 2


def test_one_sided_image_is_not_even():
    pair = shifted_exponential(-1.0)
    report = symmetry_report(pair.image, [q(0.5, 0.3, 0.2, 0.0), q(0.2, -0.4, 0.1, 0.3)])
    assert report.conj_sym < 1e-12
    assert report.even_sym > 0.1
    assert report.reciprocal_even_sym > 0.1


def test_flip_first():
    assert flip_first(q(1.0, 2.0, 3.0, 4.0)) == q(1.0, -2.0, 3.0, 4.0)


def test_quasi_regularity():
    probes = [q(0.3, 0.2, 0.5, 0.0), q(0.3, 0.0, 0.5, 0.0)]
    assert quasi_regularity_check(gaussian().original, TransformSpec(), probes) < 1e-7
    vector_valued = Original(func=lambda t: i(1) * math.exp(-t * t), s0=-math.inf, s1=math.inf,
                             support="two_sided", name="i1 exp(-t^2)")
    assert quasi_regularity_check(vector_valued, TransformSpec(), probes) > 1e-3
    assert quasi_regularity_check(vector_valued, TransformSpec(), [0.5 + 0.3j]) == 0.0


def test_bromwich_line():
    line = BromwichLine(0.5, i(2) * 3.0)
    assert close(line.point(2.0), q(0.5, 0.0, 2.0, 0.0), 0, 1e-15)
    with pytest.raises(OutOfDomain):
        BromwichLine(0.5, 1.0 + i(1))
    with pytest.raises(DomainOfConvergence):
        line.check_strip(1.0)
    assert line.mirrored().a == -0.5


@pytest.mark.slow
def test_invert_rational_image():
    F = lambda p: (p + 1.0).inverse()
    line = BromwichLine(0.5)
    assert close(invert(F, 1.0, line, strip=(-1.0, math.inf)), math.exp(-1.0), 0, 1e-6)
    assert close(invert(F, -1.0, line), 0.0, 0, 1e-6)
    assert close(invert(F, 0.0, line), 0.5, 0, 1e-6)


@pytest.mark.slow
def test_invert_recovers_vector_valued_original():
    F = lambda p: i(2) * (p + 1.0).inverse()
    assert close(invert(F, 1.0, BromwichLine(0.5)), i(2) * math.exp(-1.0), 0, 1e-6)


@pytest.mark.slow
@pytest.mark.parametrize("pair,a,t", [
    (gaussian(), 0.0, 0.7),
    (two_sided_exponential(), 0.2, -0.8),
    (logistic(), -0.5, 0.6),
])
def test_invert_two_sided_pairs(pair, a, t):
    value = invert(pair.image, t, BromwichLine(a), strip=pair.strip)
    assert close(value, pair.original(t), 0, 1e-6)


@pytest.mark.slow
def test_invert_componentwise():
    images = [lambda p: (p + 1.0).inverse(), lambda p: 0.0, lambda p: (p + 2.0).inverse() * 2.0, lambda p: 0.0]
    expected = math.exp(-1.0) + i(2) * (2.0 * math.exp(-2.0))
    assert close(invert(images, 1.0, BromwichLine(0.5)), expected, 0, 1e-6)
    with pytest.raises(ValueError):
        invert(images[:2], 1.0, BromwichLine(0.5))


@pytest.mark.slow
def test_invert_mellin_gamma():
    pair = gamma_mellin()
    assert close(invert_mellin(pair.image, 1.3, BromwichLine(1.0)), math.exp(-1.3), 0, 1e-6)
    with pytest.raises(OutOfDomain):
        invert_mellin(pair.image, 0.0, BromwichLine(1.0))


def test_inversion_preconditions():
    with pytest.raises(ValueError):
        invert(lambda p: p, 1.0, BromwichLine(0.5), TransformSpec(q=i(1)))
    with pytest.raises(ValueError):
        invert(lambda p: p, 1.0, BromwichLine(0.5, i(2)), TransformSpec(kernel="spherical"))
    with pytest.raises(DomainOfConvergence):
        invert(lambda p: p, 1.0, BromwichLine(0.5), strip=(1.0, math.inf))
