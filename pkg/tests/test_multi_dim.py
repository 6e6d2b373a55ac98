import math

import numpy as np
import pytest
from numpy.polynomial import Polynomial

from src.core import (
    ContractViolation,
    LaminateProfile,
    ProfileError,
    WellPosednessError,
    chi,
    p_alpha,
    p_alpha_coefficients,
    p_alpha_evaluation,
    q_tilde,
    q_tilde_evaluation,
    tanh_complement,
)
from src.multi_dim import (
    DiscreteSequence,
    SequenceSource,
    asymptotic_cutoff,
    criterion_chain,
    dirichlet_eigenvalues,
    inner_spectrum_dd,
    positive_roots,
    qcrit_check,
    shifted_numerator,
    uniform_bound_check,
    well_posed_dd,
)
from src.multi_dim.scan import _cross_check, s_grid

PI2 = math.pi**2


def alternating(r: int, s: float = 0.0) -> LaminateProfile:
    return LaminateProfile(tuple((-1.0) ** j + s for j in range(r + 1)))


def z(s: float) -> float:
    return math.sqrt((1 - s**2) / (1 + s**2))


@pytest.mark.parametrize(
    "dim, k_max, expected",
    [(1, 3, [1, 4, 9]), (2, 2, [2, 5, 8]), (1, 1, [1])],
)
def test_dirichlet_eigenvalues(dim, k_max, expected):
    seq = dirichlet_eigenvalues(dim, k_max)

    assert list(seq.values) == pytest.approx([PI2 * i for i in expected])
    assert seq.source == SequenceSource.DIRICHLET_BOX


def test_discrete_sequence_validation():
    assert dirichlet_eigenvalues(1, 1).separation == math.inf
    assert DiscreteSequence.from_values([3.0, 1.0, 3.0]).values == (1.0, 3.0)

    with pytest.raises(ProfileError):
        DiscreteSequence((1.0, -2.0))

    with pytest.raises(ProfileError):
        DiscreteSequence((1.0, 1.0))

    with pytest.raises(ContractViolation):
        dirichlet_eigenvalues(0, 3)


def test_qcrit_shifted_pair_is_satisfied():
    seq = dirichlet_eigenvalues(1, 10)

    for s in (-0.5, 0.2, 0.5):
        result = qcrit_check(alternating(1, s), seq)

        assert result.satisfied
        assert result.witness is None
        assert result.delta0 == pytest.approx(0.1)


def test_qcrit_alternating_pair_fails():
    alpha = alternating(1)
    result = qcrit_check(alpha, dirichlet_eigenvalues(1, 10))

    assert not result.satisfied
    assert result.witness is not None
    assert result.witness.d == 0.0
    assert result.mu_star is None
    assert result.k_checked == 10
    assert any("certification impossible" in i for i in result.notes)

    w = result.witness
    rates = np.sqrt(w.lam + np.sign(alpha.array) * w.d)
    assert q_tilde_evaluation(alpha, rates).is_zero(1e-9)


def test_qcrit_positive_profile():
    result = qcrit_check(LaminateProfile((1.0, 2.0)), dirichlet_eigenvalues(1, 10))

    assert result.satisfied
    assert result.delta0 > 0
    assert result.k_checked + result.k_certified == 10


def test_qcrit_empty_grid_is_noted():
    result = qcrit_check(LaminateProfile((1.0, 2.0)), dirichlet_eigenvalues(1, 3), delta_grid=())

    assert result.satisfied
    assert any("no perturbation" in i for i in result.notes)


def test_qcrit_skipped_pairs_do_not_verify_a_shift():
    alpha = LaminateProfile((1.0, -0.5))
    seq = DiscreteSequence.from_values([0.01, 0.02])

    result = qcrit_check(alpha, seq, delta_grid=(0.1,))

    assert result.delta0 == 0.0
    assert len(result.skipped) == 4
    assert any("no perturbation was verified" in i for i in result.notes)

    result = qcrit_check(alpha, seq, delta_grid=(0.001, 0.1))

    assert result.delta0 < 0.1
    assert all(abs(d) == 0.1 for _, d in result.skipped)


def test_tail_certificate_is_valid(profile_factory, rng):
    seq = dirichlet_eigenvalues(1, 200)
    certified_profiles = 0

    for _ in range(40):
        alpha = profile_factory(r=int(rng.integers(1, 6)), indefinite=True)
        mu_star = asymptotic_cutoff(alpha)

        if mu_star is None:
            continue

        tail = [lam for lam in seq.values if math.sqrt(lam) >= mu_star]

        if not tail:
            continue

        certified_profiles += 1

        for lam in rng.choice(tail, size=min(10, len(tail)), replace=False):
            mu = math.sqrt(lam)
            value = mu * q_tilde(alpha, [mu] * alpha.slabs)

            assert abs(value - chi(alpha)) <= abs(chi(alpha)) / 2

    assert certified_profiles > 0


@pytest.mark.parametrize("values", [(1.0, -2.0), (1.0, -2.0, 1.0, 3.0), (2.0, -0.3, 5.0)])
def test_asymptotic_cutoff_meets_the_tail_bound(values):
    alpha = LaminateProfile(values)
    coefficients = p_alpha_coefficients(alpha)
    slope = float(np.sum(np.arange(len(coefficients)) * np.abs(coefficients)))
    target = abs(chi(alpha)) / 4

    mu_star = asymptotic_cutoff(alpha)

    assert slope * tanh_complement(mu_star * alpha.h) <= target * (1 + 1e-12)

    if mu_star > 0:
        assert slope * tanh_complement(0.99 * mu_star * alpha.h) > target


def test_well_posed_dd_examples():
    seq = dirichlet_eigenvalues(1, 10)

    assert well_posed_dd(alternating(1, 0.5), seq)
    assert well_posed_dd(LaminateProfile((1.0, 2.0, 4.0)), seq)

    # z(0.3) lies in (t0, 1)
    assert math.tanh(math.pi / 4) < z(0.3) < 1
    assert not well_posed_dd(alternating(3, 0.3), seq)


def test_well_posed_dd_refuses_degenerate_profile():
    with pytest.raises(WellPosednessError) as error:
        well_posed_dd(alternating(1), dirichlet_eigenvalues(1, 3))

    assert "degenerate_a" in str(error.value)


def test_well_posed_dd_implies_criterion(profile_factory):
    seq = dirichlet_eigenvalues(1, 10)
    decided = 0

    for _ in range(60):
        alpha = profile_factory(r=3, indefinite=True)

        try:
            if not well_posed_dd(alpha, seq):
                continue

        except WellPosednessError:
            continue

        decided += 1
        assert qcrit_check(alpha, seq, delta_grid=(1e-6,)).satisfied

    assert decided > 0


@pytest.mark.parametrize("s", [-0.6, -0.3, -0.1, 0.1, 0.3, 0.6])
def test_positive_root_of_shifted_alternating_profile(s):
    roots = positive_roots(alternating(3, s))

    assert roots == pytest.approx([z(s)], abs=1e-8)


def test_positive_roots_of_degenerate_and_single_slab():
    assert positive_roots(alternating(3)) == []
    assert positive_roots(LaminateProfile((2.0,))) == []


def test_q_tilde_and_p_alpha_agree_on_modes():
    alpha = alternating(3, 0.3)

    for lam in dirichlet_eigenvalues(1, 10).values:
        mu = math.sqrt(lam)
        t = math.tanh(mu * alpha.h)
        scaled = mu * q_tilde(alpha, [mu] * 4)

        assert scaled == pytest.approx(p_alpha(alpha, t), rel=1e-12, abs=1e-14)


def test_shifted_numerator_clears_denominators(profile_factory, rng):
    for _ in range(20):
        alpha = profile_factory(r=3)
        t = rng.uniform(0.1, 1.0)
        s = rng.uniform(-0.05, 0.05)
        denominator = np.prod(alpha.array[1:] - s)
        evaluation = p_alpha_evaluation(alpha.shifted(s), t)

        assert abs(shifted_numerator(alpha, t)(s) - denominator * evaluation.value) <= (
            1e-10 * abs(denominator) * evaluation.magnitude
        )


def test_scan_of_alternating_pair():
    report = inner_spectrum_dd(alternating(1), dirichlet_eigenvalues(1, 10), bound=2.0)

    assert report.scan_roots
    assert all(abs(i.s) <= 1e-12 for i in report.scan_roots)
    assert set(report.points) <= {-1.0, 0.0, 1.0}
    assert report.continuous_caveat
    assert any(i.k is None and i.t == 1.0 for i in report.scan_roots)


def test_scan_of_constant_profile():
    report = inner_spectrum_dd(LaminateProfile((2.0, 2.0)), dirichlet_eigenvalues(1, 5), bound=3.0)

    assert report.scan_roots == ()
    assert report.points == (2.0,)


def test_scan_roots_accumulate_at_zero():
    alpha = alternating(3)
    report = inner_spectrum_dd(alpha, dirichlet_eigenvalues(1, 10), bound=2.0)

    for eps in (0.1, 0.01, 0.001):
        assert any(0 < abs(i.s) <= eps for i in report.scan_roots)

    for root in report.scan_roots:
        assert -2.0 <= root.s <= 2.0

        if root.s != 0:
            assert root.s**2 == pytest.approx((1 - root.t**2) / (1 + root.t**2), rel=1e-6)


def test_scan_roots_are_certified():
    alpha = LaminateProfile((1.0, -2.0, 1.0, 3.0))
    report = inner_spectrum_dd(alpha, dirichlet_eigenvalues(2, 4), bound=4.0)

    for root in report.scan_roots:
        evaluation = p_alpha_evaluation(alpha.shifted(root.s), root.t)

        assert abs(evaluation.value) <= 1e-9 * evaluation.magnitude
        assert -4.0 <= root.s <= 4.0


def test_scan_roots_vanish_on_the_rate_branch():
    alpha = LaminateProfile((1.0, -2.0, 1.0, 3.0))
    seq = dirichlet_eigenvalues(2, 4)
    report = inner_spectrum_dd(alpha, seq, bound=4.0)
    checked = 0

    for root in report.scan_roots:
        if root.k is None:
            continue

        mu = math.sqrt(seq.values[root.k])
        evaluation = q_tilde_evaluation(alpha.shifted(root.s), [mu] * alpha.slabs)

        assert abs(mu * evaluation.value) <= 1e-9 * mu * evaluation.magnitude
        checked += 1

    assert checked > 0


def test_scan_refinement_is_monotone():
    alpha = LaminateProfile((1.0, -2.0, 1.0))
    coarse = inner_spectrum_dd(alpha, dirichlet_eigenvalues(1, 5), bound=3.0)
    fine = inner_spectrum_dd(alpha, dirichlet_eigenvalues(1, 10), bound=3.0, s_resolution=0.01)

    assert {(i.s, i.t) for i in coarse.scan_roots} <= {(i.s, i.t) for i in fine.scan_roots}


def test_scan_grid_cross_check_is_consistent():
    report = inner_spectrum_dd(
        LaminateProfile((1.0, -2.0, 1.0)), dirichlet_eigenvalues(1, 3), bound=3.0, s_resolution=0.01
    )

    assert report.notes == ()


def test_shift_grid_hits_the_bound_exactly():
    grid = s_grid(3.0, 0.07)

    assert grid[0] == -3.0
    assert grid[-1] == 3.0
    assert np.all(np.diff(grid) <= 0.07 + 1e-15)


def test_cross_check_tolerates_roundoff_at_cell_edges():
    numerator = Polynomial([-0.05, 1.0])
    edge = float(s_grid(1.0, 0.1)[10])

    assert _cross_check(numerator, [edge - 1e-14], [], 1.0, 0.1) == 0
    assert _cross_check(numerator, [0.05], [], 1.0, 0.1) == 0
    assert _cross_check(numerator, [edge - 1e-6], [], 1.0, 0.1) == 1
    assert _cross_check(numerator, [], [0.1], 1.0, 0.1) == 0


def test_scan_requires_bound_above_coefficients():
    with pytest.raises(ContractViolation):
        inner_spectrum_dd(LaminateProfile((1.0, -3.0)), dirichlet_eigenvalues(1, 3), bound=2.0)


def test_uniform_bound_check():
    seq = dirichlet_eigenvalues(1, 5)

    assert uniform_bound_check(LaminateProfile((1.0, 2.0)), seq, bound=1.0).satisfied

    failed = uniform_bound_check(alternating(1), seq, bound=1.0)
    assert not failed.satisfied
    assert failed.witness.k == 0

    with pytest.raises(ContractViolation):
        uniform_bound_check(LaminateProfile((1.0, 2.0)), seq, bound=0.05)


def test_criterion_chain():
    seq = dirichlet_eigenvalues(1, 10)

    chain = criterion_chain(LaminateProfile((1.0, 2.0)), seq)
    assert chain.implies_criterion
    assert all(i.holds for i in chain.steps)

    chain = criterion_chain(alternating(1), seq)
    assert not chain.necessary_holds
    assert not chain.step("mean_inv_nonzero").holds

    chain = criterion_chain(alternating(3, 0.3), seq)
    assert chain.implies_criterion
    assert not chain.step("p_alpha_nonzero_on_interval").holds
