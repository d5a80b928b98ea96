import numpy as np
import pytest


from cd_analysis.algebra.CdNumber import CdNumber
from cd_analysis.algebra.arithmetic import close, random_cd
from cd_analysis.exceptions import LevelMismatch, RePartMismatch
from cd_analysis.rotor.RotationAutomorphism import RotationAutomorphism
from cd_analysis.rotor.rotation import apply, build_rotation, find_partner, partner_axes


def i(j, level=3):
    return CdNumber.basis(j, level)


def random_pair(rng, level, r=1):
    z = random_cd(rng, level)
    return z, find_partner(z, r)


def test_complex_points_give_identity():
    T = build_rotation(CdNumber([1, 2]), CdNumber([1, -2]), (1, 2))
    assert T.is_identity()
    assert build_rotation(CdNumber([0.5, 0, 1, 0]), CdNumber([0.5, 1, 0, 0]), (2, 3)).is_identity()


def test_axis_of_z_is_the_image_of_i1():
    T = build_rotation(i(2, 2), i(1, 2), (1, 2))
    assert close(T.apply(i(1, 2)), i(2, 2), 0, 1e-15)


def test_frame_of_i1_is_identity():
    assert RotationAutomorphism.frame(i(1, 3), 3).is_identity()
    assert RotationAutomorphism.frame(i(1, 2), 2).is_identity()


@pytest.mark.parametrize("level", [2, 3])
def test_automorphism_invariants_on_many_constructions(level, rng):
    for _ in range(1000 if level == 2 else 200):
        z, x = random_pair(rng, level)
        T = build_rotation(z, x, (1, level))
        defects = T.defects()
        assert defects["orthonormality"] < 1e-11
        assert defects["multiplicativity"] < 1e-11
        assert T.determinant() == pytest.approx(1.0, abs=1e-11)
        assert close(T.apply(x), z, 1e-11, 1e-11)


def test_fixes_reals_and_preserves_norm(rng):
    z, x = random_pair(rng, 3)
    T = build_rotation(z, x)
    assert T.apply(5.0) == CdNumber.real(5.0, 3)
    for _ in range(100):
        w = random_cd(rng, 3)
        assert T.apply(w).norm() == pytest.approx(w.norm(), rel=1e-12)


def test_multiplicative_on_random_products(rng):
    z, x = random_pair(rng, 3)
    T = build_rotation(z, x)
    for _ in range(100):
        a, b = random_cd(rng, 3), random_cd(rng, 3)
        assert close(apply(T, a * b), apply(T, a) * apply(T, b), 1e-11, 1e-11)


def test_scale_invariance(rng):
    for _ in range(100):
        z, x = random_pair(rng, 3)
        v, w = rng.uniform(0.1, 10, size=2)
        T1 = build_rotation(z, x)
        T2 = build_rotation(z.im * v, x.im * w)
        assert np.allclose(T1.matrix, T2.matrix, atol=1e-12)


def test_slice_invariance(rng):
    for _ in range(100):
        z, x = random_pair(rng, 3)
        shift = float(rng.normal())
        T1 = build_rotation(z, x)
        T2 = build_rotation(z + shift, x + shift)
        assert np.allclose(T1.matrix, T2.matrix, atol=1e-12)


def test_find_partner_examples(rng):
    z = CdNumber([3, 0, 0, 0, 0, 4, 0, 0])
    x = find_partner(z)
    assert x == CdNumber([3, 4])
    assert close(build_rotation(z, x).apply(x), z, 1e-12, 1e-12)
    c = CdNumber([1, -2])
    assert find_partner(c) == c
    for _ in range(100):
        z = random_cd(rng, 3)
        for r in (1, 2):
            x = find_partner(z, r)
            assert x.min_level() <= r
            assert x.re == z.re
            assert x.im.norm() == pytest.approx(z.im.norm(), rel=1e-14)


def test_quaternion_family_into_octonions(rng):
    for _ in range(100):
        z, x = random_pair(rng, 3, r=2)
        T = build_rotation(z, x, (2, 3))
        assert close(T.apply(x), z, 1e-11, 1e-11)
        defects = T.defects()
        assert defects["orthonormality"] < 1e-11
        assert defects["multiplicativity"] < 1e-11
        assert build_rotation(z, x, (2, 3)).to_json() == T.to_json()
        axes = partner_axes(T)
        assert close(axes["M"] * axes["N"], axes["MN"], 1e-12, 1e-12)


def test_transitive_on_the_sphere(rng):
    for _ in range(100):
        z = random_cd(rng, 3)
        angle = rng.uniform(0, 2 * np.pi)
        x = CdNumber([z.re, z.im.norm() * np.cos(angle), z.im.norm() * np.sin(angle)], 1)
        assert close(build_rotation(z, x).apply(x), z, 1e-10, 1e-10)


def test_errors():
    with pytest.raises(RePartMismatch):
        build_rotation(CdNumber([1, 0, 1, 0]), CdNumber([0, 1]), (1, 2))
    with pytest.raises(LevelMismatch):
        build_rotation(i(5), i(1), (1, 2))
    with pytest.raises(LevelMismatch):
        build_rotation(i(5), i(2), (1, 3))
    with pytest.raises(LevelMismatch):
        RotationAutomorphism.identity(2).apply(i(5))


def test_compose_and_inverse(rng):
    z, x = random_pair(rng, 3)
    T = build_rotation(z, x)
    assert T.compose(T.inverse()).is_identity(1e-12)
