import cmath
import math


from hypothesis import given
import hypothesis.strategies as st
import numpy as np
import pytest


from cd_analysis.algebra.CdNumber import CdNumber
from cd_analysis.algebra.arithmetic import close, random_cd
from cd_analysis.exceptions import DegenerateAngles, ZeroArgument
from cd_analysis.transcend.elementary import exp, exp_derivative, ln, ln_nearest, plane_apply, polar, power, sin, cos
from cd_analysis.transcend.iterated import E, E_inv, exp_n, ln_n
from cd_analysis.transcend.spherical import axis_from_angles, from_spherical, to_spherical


def i(j, level=3):
    return CdNumber.basis(j, level)


def unit_imaginary(rng, level):
    v = random_cd(rng, level).im
    return v / v.norm()


def test_exp_examples():
    assert close(exp(i(1, 1) * math.pi), -1.0, 0, 1e-15)
    assert close(exp(1 + i(2, 2) * math.pi), -math.e, 0, 1e-14)
    assert exp(CdNumber([0, 0, 0, 0])) == CdNumber.real(1.0, 2)


def test_exp_of_right_angle_returns_axis(rng):
    for level in (2, 3):
        M = unit_imaginary(rng, level)
        assert close(exp(M * (math.pi / 2)), M, 0, 1e-15)


@given(st.floats(-5, 5), st.floats(-20, 20))
def test_exp_on_a_plane_matches_complex_exp(x, y):
    rng = np.random.default_rng(abs(hash((x, y))) % 2**32)
    M = unit_imaginary(rng, 3)
    w = cmath.exp(complex(x, y))
    assert close(exp(M * y + x), M * w.imag + w.real, 1e-12, 1e-12)


def test_polar_and_ln_examples():
    p = polar(CdNumber([0, 0, 2, 0]))
    assert p.modulus == 2.0 and p.axis == i(2, 2) and p.angle == pytest.approx(math.pi / 2) and p.branch == 0
    assert ln(1.0, 0) == 0.0
    with pytest.raises(ZeroArgument):
        ln(CdNumber([0, 0, 0, 0]))


def test_negative_reals_use_i1_axis():
    p = polar(-3.0)
    assert p.axis == i(1, 1) and p.angle == pytest.approx(math.pi)
    assert close(ln(-1.0), i(1, 1) * math.pi, 0, 1e-15)


def test_exp_derivative_matches_central_difference(rng):
    delta = 1e-6
    for level in (1, 2, 3):
        for _ in range(20):
            z, h = random_cd(rng, level), random_cd(rng, level)
            difference = (exp(z + h * delta) - exp(z - h * delta)) / (2.0 * delta)
            assert close(exp_derivative(z, h), difference, 1e-7, 1e-8)
    for z in (CdNumber.real(0.7, 2), 0.7 + i(2, 2) * 1e-6):
        h = 0.3 + i(1, 2)
        difference = (exp(z + h * delta) - exp(z - h * delta)) / (2.0 * delta)
        assert close(exp_derivative(z, h), difference, 1e-7, 1e-8)


def test_exp_ln_round_trip(rng):
    for _ in range(1000):
        z = random_cd(rng, 3)
        assert close(exp(ln(z, 0)), z, 1e-10, 1e-12)


def test_ln_branches_differ_by_whole_turns(rng):
    for _ in range(50):
        z = random_cd(rng, 3)
        n = int(rng.integers(-3, 4))
        axis = polar(z).axis
        assert close(ln(z, n) - ln(z, 0), axis * (2 * math.pi * n), 1e-12, 1e-12)
        assert close(exp(ln(z, n)), z, 1e-10, 1e-12)


def test_ln_nearest_follows_the_reference():
    z = CdNumber([0, 0, 1, 0])
    ref = i(2, 2) * (2 * math.pi + 1.5)
    assert close(ln_nearest(z, ref), i(2, 2) * (2 * math.pi + math.pi / 2), 1e-12, 1e-12)
    # Real argument picks up the reference axis.
    assert close(ln_nearest(-1.0, i(3, 2) * 3.0), i(3, 2) * math.pi, 1e-12, 1e-12)


def test_power_examples():
    assert close(power(4.0, 0.5), 2.0, 1e-15, 1e-15)
    assert close(power(i(1, 1), 2), -1.0, 0, 1e-15)
    assert close(power(math.e, i(2, 2) * math.pi), -1.0, 0, 1e-15)
    with pytest.raises(ZeroArgument):
        power(0.0, 2.0)


def test_plane_functions_match_complex_ones():
    z = CdNumber([0.3, 0, 0, 0, 0.4, 0, 0, 0])
    w = complex(0.3, 0.4)
    assert close(sin(z), i(4) * cmath.sin(w).imag + cmath.sin(w).real, 1e-14, 1e-15)
    assert close(cos(z), i(4) * cmath.cos(w).imag + cmath.cos(w).real, 1e-14, 1e-15)
    assert plane_apply(cmath.exp, 0.0) == 1.0


def test_exp_n_examples(rng):
    z = random_cd(rng, 2)
    assert close(exp_n([1.0], z), exp(z))
    a1, a2 = random_cd(rng, 2), random_cd(rng, 2)
    assert close(exp_n([a1, a2], 0.0), exp(a1), 1e-14, 1e-14)
    with pytest.raises(ZeroArgument):
        exp_n([0.0], z)


def test_ln_1_inverts_exp_1_for_real_coefficients(rng):
    for _ in range(100):
        a = float(rng.uniform(0.2, 3.0)) * (1 if rng.random() < 0.5 else -1)
        z = CdNumber([rng.uniform(-1, 1), rng.uniform(-3, 3) / abs(a)])
        assert close(ln_n([a], exp_n([a], z)), z, 1e-10, 1e-12)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_ln_n_inverts_exp_n_on_principal_domains(n, rng):
    for _ in range(50):
        a = [CdNumber.real(float(rng.uniform(0.3, 0.6))) for _ in range(n)]
        z = random_cd(rng, 3, scale=0.3)
        assert close(ln_n(a, exp_n(a, z)), z, 1e-9, 1e-10)


def test_spherical_examples():
    s = to_spherical(i(1, 2))
    assert s.radius == 1.0
    assert s.theta == pytest.approx((math.pi / 2, 0.0, 0.0))
    assert axis_from_angles([0.0] * 7) == i(1)
    with pytest.raises(ZeroArgument):
        to_spherical(CdNumber([0, 0]))


def test_spherical_round_trip(rng):
    for _ in range(1000):
        z = random_cd(rng, int(rng.integers(1, 4)))
        s = to_spherical(z)
        assert 0 <= s.theta[0] < 2 * math.pi
        assert all(0 <= t <= math.pi for t in s.theta[1:])
        assert close(from_spherical(s), z, 1e-10, 1e-12)
        assert axis_from_angles(s.theta).norm() == pytest.approx(1.0)


def test_E_is_identity_on_complex_slice(rng):
    for level in (2, 3):
        for _ in range(20):
            y = CdNumber(rng.normal(size=2), 1).embed(level)
            assert E(y) == y


def test_E2_example():
    assert close(E(CdNumber([0, 1, math.pi / 2, 0])), i(2, 2), 0, 1e-15)


def test_E2_expanded_form(rng):
    for _ in range(200):
        p0, p1, p2, p3 = rng.uniform(-3, 3, size=4)
        expected = CdNumber([
            p0,
            p1 * math.cos(p2),
            p1 * math.sin(p2) * math.cos(p3),
            p1 * math.sin(p2) * math.sin(p3),
        ])
        assert close(E(CdNumber([p0, p1, p2, p3])), expected, 1e-12, 1e-12)


def test_nested_rotation_identity():
    a, b, c = 0.7, 1.1, -0.4
    inner = exp(i(3, 2) * (-b) * exp(i(1, 2) * (-c)))
    lhs = exp(i(1, 2) * a * inner)
    rhs = CdNumber([
        math.cos(a),
        math.sin(a) * math.cos(b),
        math.sin(a) * math.sin(b) * math.cos(c),
        math.sin(a) * math.sin(b) * math.sin(c),
    ])
    assert close(lhs, rhs, 1e-12, 1e-12)


@pytest.mark.parametrize("level", [2, 3])
def test_E_inv_round_trip(level, rng):
    n = 2 ** level
    for _ in range(300):
        p = np.empty(n)
        p[0] = rng.uniform(-3, 3)
        p[1] = rng.uniform(0.1, 3)
        p[2:n - 1] = rng.uniform(0.1, math.pi - 0.1, size=n - 3)
        p[n - 1] = rng.uniform(-math.pi + 0.1, math.pi - 0.1)
        p = CdNumber(p)
        assert close(E_inv(E(p)), p, 1e-10, 1e-10)


def test_E_inv_branch_shifts_last_angle():
    p = CdNumber([0.5, 1.0, 1.0, 0.4])
    assert E_inv(E(p), branch=1).coeffs[3] == pytest.approx(0.4 + 2 * math.pi)


def test_E_inv_degenerate_middle_layer():
    # Just off the complex slice: p2 = 0 and the inner directions are undetermined.
    z = CdNumber([0.0, 1.0, 0.0, 0.0]) + CdNumber([0, 0, 0, 0, 1e-20, 0, 0, 0])
    with pytest.raises(DegenerateAngles):
        E_inv(z)
