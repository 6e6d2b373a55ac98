import numpy as np
import pytest

from src.core import (
    ContractViolation,
    LaminateProfile,
    LimitCase,
    PoleError,
    WellPosednessError,
    char_function,
)
from src.one_dim import (
    GridFunction,
    g_limit_1d,
    inner_spectrum_1d,
    is_well_posed_1d,
    mean,
    mean_inv,
    mean_resolvent,
    projected_residual,
    solve_projected_1d,
)


@pytest.mark.parametrize(
    "values, expected",
    [((1.0, -2.0, 1.0), 0.0), ((4.0,), 4.0), ((1.0, -1.0, 1.0), 1 / 3)],
)
def test_mean(values, expected):
    assert mean(LaminateProfile(values)) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize(
    "values, expected",
    [((0.5, 1 / 3), 2.5), ((1.0, -1.0), 0.0), ((1.0, -2.0, 1.0), 0.5)],
)
def test_mean_inv(values, expected):
    assert mean_inv(LaminateProfile(values)) == pytest.approx(expected, abs=1e-15)


def test_mean_resolvent():
    alpha = LaminateProfile((1.0, -2.0, 1.0))

    assert mean_resolvent(alpha, 0.0) == pytest.approx(0.5)
    assert mean_resolvent(alpha, 1j) == pytest.approx(
        np.mean([1 / (1 - 1j), 1 / (-2 - 1j), 1 / (1 - 1j)])
    )

    with pytest.raises(PoleError) as error:
        mean_resolvent(alpha, -2.0)

    assert error.value.location == -2.0


def test_solve_projected_constant_coefficient(rng):
    alpha = LaminateProfile((3.0,))
    psi = GridFunction(rng.normal(size=64)).centered()
    phi = solve_projected_1d(alpha, psi)

    assert phi.samples == pytest.approx(psi.samples / 3.0, abs=1e-15)


def test_solve_projected_indicator_difference():
    alpha = LaminateProfile((1.0, 2.0))
    psi = GridFunction.from_callable(lambda x: np.where(x < 0.5, 1.0, -1.0), 128)
    phi = solve_projected_1d(alpha, psi)

    assert projected_residual(alpha, phi, psi) < 1e-12
    assert abs(phi.mean()) < 1e-14


def test_solve_projected_sign_changing_coefficient():
    alpha = LaminateProfile((1.0, -2.0, 1.0))
    psi = GridFunction.from_callable(lambda x: np.sin(2 * np.pi * x), 300).centered()
    phi = solve_projected_1d(alpha, psi)

    assert projected_residual(alpha, phi, psi) < 1e-10


def test_solve_projected_identity_on_random_data(profile_factory, rng):
    for _ in range(50):
        alpha = profile_factory()

        if not is_well_posed_1d(alpha):
            continue

        psi = GridFunction(rng.normal(size=12 * alpha.slabs)).centered()
        phi = solve_projected_1d(alpha, psi)
        correction = np.mean(psi.samples / alpha.sample(psi.n)) / mean_inv(alpha)

        assert projected_residual(alpha, phi, psi) <= 1e-12 * (
            np.max(np.abs(psi.samples)) + abs(correction)
        )


def test_solve_projected_contracts():
    psi = GridFunction(np.ones(4))

    with pytest.raises(ContractViolation):
        solve_projected_1d(LaminateProfile((1.0, 2.0)), psi)

    with pytest.raises(ContractViolation):
        solve_projected_1d(LaminateProfile((1.0, 2.0, 3.0)), psi.centered())

    with pytest.raises(WellPosednessError) as error:
        solve_projected_1d(LaminateProfile((1.0, -1.0)), psi.centered())

    assert "degenerate_a" in str(error.value)


def test_grid_function_contracts():
    with pytest.raises(ContractViolation):
        GridFunction([1.0])

    with pytest.raises(ContractViolation):
        GridFunction([1.0, np.nan])


def test_inner_spectrum_examples():
    report = inner_spectrum_1d(LaminateProfile((1.0, -1.0)))
    assert report.value_points == (1.0, -1.0)
    assert list(report.mean_zero_roots) == pytest.approx([0.0], abs=1e-15)

    report = inner_spectrum_1d(LaminateProfile((2.0, 2.0, 2.0)))
    assert report.value_points == (2.0,)
    assert report.mean_zero_roots == ()

    report = inner_spectrum_1d(LaminateProfile((1.0, 2.0)))
    assert list(report.mean_zero_roots) == pytest.approx([1.5])
    assert report.points == pytest.approx((1.0, 1.5, 2.0))


def test_inner_spectrum_weights_repeated_values():
    # 2/(1 - l) + 1/(4 - l) = 0 at l = 3
    report = inner_spectrum_1d(LaminateProfile((1.0, 4.0, 1.0)))

    assert list(report.mean_zero_roots) == pytest.approx([3.0])


def test_inner_spectrum_roots_are_certified(profile_factory):
    for _ in range(50):
        alpha = profile_factory()
        report = inner_spectrum_1d(alpha)

        assert len(report.mean_zero_roots) <= alpha.r

        for root in report.mean_zero_roots:
            assert isinstance(root, float)
            assert min(alpha.values) < root < max(alpha.values)

            terms = 1 / (alpha.array - root)
            assert abs(mean_resolvent(alpha, root)) <= 1e-9 * np.mean(np.abs(terms))


def test_characteristic_function_consistency(profile_factory):
    for _ in range(200):
        alpha = profile_factory()
        evaluation = char_function(alpha, np.zeros(alpha.slabs))
        expected = alpha.values[0] * mean_inv(alpha)

        assert abs(evaluation.raw_value - expected) <= 1e-10 * max(
            abs(expected), evaluation.magnitude
        )


def test_g_limit_1d():
    limit = g_limit_1d(LaminateProfile((0.5, 1 / 3)))
    assert limit.case == LimitCase.SCALAR_1D
    assert limit.coefficients == pytest.approx((0.4,))

    limit = g_limit_1d(LaminateProfile((1.0, -1.0)))
    assert limit.case == LimitCase.DEGENERATE_A
    assert limit.coefficients == ()

    assert g_limit_1d(LaminateProfile((7.0,))).coefficients == pytest.approx((7.0,))


def test_well_posedness_is_scale_aware():
    assert not is_well_posed_1d(LaminateProfile((1.0, -1.0)))
    assert not is_well_posed_1d(LaminateProfile((1e-6, -1e-6)))
    assert is_well_posed_1d(LaminateProfile((1.0, -1.0 + 1e-6)))
