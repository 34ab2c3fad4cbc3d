import math

import numpy as np
import pytest

from bisochan import (
    BisoChannel,
    Channel,
    ClassMismatchError,
    DimensionTooLargeError,
    ParameterOutOfRangeError,
    bsc_degrading_map,
    canonicalize_biso,
    capacity_biso,
    channel_class,
    compose,
    dim3_channel,
    dim3_degrading_map,
    dim3_less_noisy_compare,
    doeblin_alpha,
    eta_kl_biso,
    eta_tv,
    general_binary_dominated,
    h2,
    h2_inv,
    is_degraded,
    is_less_noisy,
    make_bec,
    make_bsc,
    make_z,
    match_extremal,
    reverse_coefficients,
    verify_reverse_alpha,
    verify_reverse_beta,
    verify_reverse_gamma,
)
from bisochan.checks import (
    ALPHA_PAIR_F,
    ETA_PAIR_A,
    random_biso,
    random_dim3_equal_alpha,
    random_dim3_equal_eta,
)


class TestMatchExtremal:
    def test_eta_self_match_on_bsc(self):
        m = match_extremal(make_bsc(0.2), "eta_kl")
        assert abs(m.bsc_p - 0.2) < 1e-12
        assert abs(m.bec_eps - (1 - 0.36)) < 1e-12

    def test_alpha_on_counterexample(self):
        m = match_extremal(ALPHA_PAIR_F.to_channel(), "alpha")
        assert abs(m.bsc_p - 0.24) < 1e-12
        assert abs(m.bec_eps - 0.48) < 1e-12

    def test_capacity_on_bec(self):
        m = match_extremal(make_bec(0.3), "capacity")
        assert abs(m.bec_eps - 0.3) < 1e-12
        assert abs(m.bsc_p - h2_inv(0.3)) < 1e-10

    def test_unknown_kind(self):
        with pytest.raises(ParameterOutOfRangeError):
            channel_class(make_bsc(0.1), "nope")

    def test_coefficient_match_invariant(self):
        rng = np.random.default_rng(31)
        for _ in range(200):
            b = random_biso(rng, max_pairs=4)
            m_eta = match_extremal(b, "eta_kl")
            assert abs(eta_kl_biso(canonicalize_biso(make_bsc(m_eta.bsc_p))) - eta_kl_biso(b)) < 1e-9
            assert abs(eta_kl_biso(canonicalize_biso(make_bec(m_eta.bec_eps))) - eta_kl_biso(b)) < 1e-9
            m_alpha = match_extremal(b, "alpha")
            assert abs(doeblin_alpha(make_bsc(m_alpha.bsc_p)) - doeblin_alpha(b.to_channel())) < 1e-9
            assert abs(doeblin_alpha(make_bec(m_alpha.bec_eps)) - doeblin_alpha(b.to_channel())) < 1e-9
            m_cap = match_extremal(b, "capacity")
            assert abs(capacity_biso(canonicalize_biso(make_bsc(m_cap.bsc_p))) - capacity_biso(b)) < 1e-9
            assert abs(capacity_biso(canonicalize_biso(make_bec(m_cap.bec_eps))) - capacity_biso(b)) < 1e-9


class TestIndicatorMap:
    def test_bsc_below_half_gives_identity(self):
        m = bsc_degrading_map(canonicalize_biso(make_bsc(0.2)))
        np.testing.assert_allclose(m.entries, np.eye(2))

    def test_counterexample_indicators(self):
        m = bsc_degrading_map(ETA_PAIR_A)
        # flat outputs (-2, -1, +1, +2): votes (0, 1, 0, 1) for input 0
        np.testing.assert_allclose(m.entries[:, 0], [0, 1, 0, 1])
        composed = compose(ETA_PAIR_A.to_channel(), m)
        assert composed.isclose(make_bsc(0.33), atol=1e-12)

    def test_tie_votes_positive_output_for_input_zero(self):
        b = BisoChannel([(0.25, 0.25), (0.4, 0.1)])
        m = bsc_degrading_map(b)
        # +1 carries the tie (vote 1), -1 must not double-vote
        flat_votes = m.entries[:, 0]  # outputs (-2, -1, +1, +2)
        assert flat_votes[2] == 1.0 and flat_votes[1] == 0.0
        alpha = doeblin_alpha(b.to_channel())
        assert compose(b.to_channel(), m).isclose(make_bsc(alpha / 2), atol=1e-12)

    def test_composition_lands_on_matched_bsc(self):
        rng = np.random.default_rng(32)
        for _ in range(50):
            b = random_biso(rng)
            target = make_bsc(doeblin_alpha(b.to_channel()) / 2)
            assert compose(b.to_channel(), bsc_degrading_map(b)).isclose(target, atol=1e-12)


class TestDim3LessNoisy:
    def test_equal_channels_hold_both_ways(self):
        f = random_dim3_equal_eta(np.random.default_rng(33), 0.3)
        assert dim3_less_noisy_compare(f, f).holds

    def test_class_mismatch(self):
        f = random_dim3_equal_eta(np.random.default_rng(34), 0.3)
        g = random_dim3_equal_eta(np.random.default_rng(35), 0.5)
        with pytest.raises(ClassMismatchError):
            dim3_less_noisy_compare(f, g)

    def test_too_many_informative_pairs(self):
        with pytest.raises(DimensionTooLargeError):
            dim3_less_noisy_compare(ETA_PAIR_A, ETA_PAIR_A)

    def test_bec_like_dominates_bsc_of_equal_eta(self):
        eta = 0.36
        bsc = canonicalize_biso(make_bsc((1 - math.sqrt(eta)) / 2))
        bec_like = canonicalize_biso(make_bec(1 - eta))
        assert dim3_less_noisy_compare(bec_like, bsc).holds
        assert dim3_less_noisy_compare(bsc, bec_like).fails

    def test_agrees_with_grid_decision(self):
        rng = np.random.default_rng(36)
        for _ in range(25):
            eta = float(rng.uniform(0.1, 0.8))
            f = random_dim3_equal_eta(rng, eta)
            g = random_dim3_equal_eta(rng, eta)
            assert dim3_less_noisy_compare(f, g).holds == is_less_noisy(f, g).holds
            assert dim3_less_noisy_compare(g, f).holds == is_less_noisy(g, f).holds

    def test_at_least_one_direction_holds(self):
        rng = np.random.default_rng(37)
        for _ in range(50):
            eta = float(rng.uniform(0.1, 0.8))
            f = random_dim3_equal_eta(rng, eta)
            g = random_dim3_equal_eta(rng, eta)
            assert dim3_less_noisy_compare(f, g).holds or dim3_less_noisy_compare(g, f).holds


class TestDim3DegradingMap:
    def test_identical_channels_get_identity_like_map(self):
        f = BisoChannel([(0.1, 0.1), (0.5, 0.3)])
        deg = dim3_degrading_map(f, f)
        np.testing.assert_allclose(deg.map.entries[1], [0.0, 1.0, 0.0])
        np.testing.assert_allclose(compose(deg.upper, deg.map).rows, deg.lower.rows, atol=1e-12)

    def test_worked_example_matrix(self):
        f = BisoChannel([(0.1, 0.1), (0.5, 0.3)])   # p0=0.2, p1=0.5, p-1=0.3
        g = BisoChannel([(0.2, 0.2), (0.4, 0.2)])   # q0=0.4, q1=0.4, q-1=0.2
        deg = dim3_degrading_map(f, g)
        assert not deg.swapped
        np.testing.assert_allclose(deg.map.entries[1], [0.25, 0.5, 0.25])
        np.testing.assert_allclose(compose(deg.upper, deg.map).rows, deg.lower.rows, atol=1e-12)

    def test_sign_flipped_pair(self):
        f = BisoChannel([(0.1, 0.1), (0.5, 0.3)])
        g_flipped = BisoChannel([(0.2, 0.2), (0.2, 0.4)])
        deg = dim3_degrading_map(f, g_flipped)
        np.testing.assert_allclose(deg.map.entries[0], [0.0, 0.0, 1.0])
        np.testing.assert_allclose(compose(deg.upper, deg.map).rows, deg.lower.rows, atol=1e-12)

    def test_orientation_swap(self):
        f = BisoChannel([(0.1, 0.1), (0.5, 0.3)])
        g = BisoChannel([(0.2, 0.2), (0.4, 0.2)])
        deg = dim3_degrading_map(g, f)
        assert deg.swapped
        np.testing.assert_allclose(compose(deg.upper, deg.map).rows, deg.lower.rows, atol=1e-12)

    def test_two_output_route(self):
        deg = dim3_degrading_map(canonicalize_biso(make_bsc(0.2)), canonicalize_biso(make_bsc(0.2)))
        np.testing.assert_allclose(compose(deg.upper, deg.map).rows, deg.lower.rows, atol=1e-12)

    def test_class_mismatch(self):
        f = random_dim3_equal_alpha(np.random.default_rng(38), 0.4)
        g = random_dim3_equal_alpha(np.random.default_rng(39), 0.6)
        with pytest.raises(ClassMismatchError):
            dim3_degrading_map(f, g)

    def test_random_equal_alpha_pairs(self):
        rng = np.random.default_rng(40)
        for _ in range(50):
            alpha = float(rng.uniform(0.1, 0.9))
            f = random_dim3_equal_alpha(rng, alpha)
            g = random_dim3_equal_alpha(rng, alpha)
            deg = dim3_degrading_map(f, g)
            err = np.abs(compose(deg.upper, deg.map).rows - deg.lower.rows).max()
            assert err <= 1e-10
            np.testing.assert_allclose(deg.map.entries.sum(axis=1), 1.0, atol=1e-12)

    def test_dim3_channel_layout(self):
        ch = dim3_channel(0.2, 0.5, 0.3)
        np.testing.assert_allclose(ch.rows, [[0.3, 0.2, 0.5], [0.5, 0.2, 0.3]])


class TestReverseCoefficients:
    def test_bsc_closed_forms(self):
        p = 0.2
        rc = reverse_coefficients(canonicalize_biso(make_bsc(p)))
        assert abs(rc.alpha_rev - 2 * p) < 1e-12
        assert abs(rc.beta_rev - 4 * p * (1 - p)) < 1e-12
        assert abs(rc.gamma_rev - (1 - h2(p))) < 1e-12

    def test_bec_closed_forms(self):
        eps = 0.35
        rc = reverse_coefficients(canonicalize_biso(make_bec(eps)))
        assert abs(rc.alpha_rev - eps) < 1e-12
        assert abs(rc.beta_rev - eps) < 1e-12
        assert abs(rc.gamma_rev - (1 - eps)) < 1e-12

    def test_counterexample_beta(self):
        rc = reverse_coefficients(ETA_PAIR_A)
        assert abs(rc.beta_rev - 0.806) < 1e-12

    def test_bisection_confirms_thresholds(self):
        rng = np.random.default_rng(41)
        for _ in range(5):
            b = random_biso(rng, max_pairs=3)
            rc = reverse_coefficients(b)
            assert abs(verify_reverse_alpha(b) - rc.alpha_rev) < 1e-6
            assert abs(verify_reverse_beta(b) - rc.beta_rev) < 1e-6

    def test_grid_confirms_gamma(self):
        b = canonicalize_biso(make_bsc(0.2))
        rc = reverse_coefficients(b)
        assert abs(verify_reverse_gamma(b, grid_points=500) - rc.gamma_rev) < 5e-3


class TestGeneralBinary:
    def test_dominated_channel_preserves_doeblin_coefficient(self):
        rng = np.random.default_rng(42)
        for ch in (make_z(0.3), make_bsc(0.1)):
            target, dmap = general_binary_dominated(ch)
            assert abs(doeblin_alpha(target) - doeblin_alpha(ch)) < 1e-12
            assert compose(ch, dmap).isclose(target, atol=1e-15)
            assert is_degraded(ch, target).holds
        for _ in range(20):
            raw = rng.uniform(0.01, 1.0, size=(2, 5))
            ch = Channel(raw / raw.sum(axis=1, keepdims=True))
            target, dmap = general_binary_dominated(ch)
            assert abs(doeblin_alpha(target) - doeblin_alpha(ch)) < 1e-12
            assert abs(eta_tv(target) - eta_tv(ch)) < 1e-12
            assert is_degraded(ch, target).holds
