"""Sampling determinism, estimator accuracy, and the validation report."""

import math

import numpy as np
import pytest

from macregions import (
    ChannelConfig,
    RateCheck,
    SampleConfig,
    ValidationReport,
    entropy_knn,
    mi_plugin_gaussian,
    shannon_rate,
    sic_cancel,
    sic_rate,
    simulate_mac,
    validate_sic_chain,
)

CH = ChannelConfig(1.0)


def _var_se(target, m):
    # standard error of the sample variance of a Gaussian with variance `target`
    return target * math.sqrt(2.0 / m)


def test_sample_config_validation():
    cfg = SampleConfig(seed=1, m=100)
    assert cfg.stream == 0
    with pytest.raises(ValueError):
        SampleConfig(seed=1, m=1)
    with pytest.raises(ValueError):
        SampleConfig(seed=-1, m=100)
    with pytest.raises(ValueError):
        SampleConfig(seed=1, m=100, stream=-2)


def test_simulate_mac_is_deterministic():
    cfg = SampleConfig(seed=42, m=10_000)
    a = simulate_mac(1.0, 1.0, CH, cfg)
    b = simulate_mac(1.0, 1.0, CH, cfg)
    assert np.array_equal(a.x1, b.x1)
    assert np.array_equal(a.x2, b.x2)
    assert np.array_equal(a.y, b.y)


def test_streams_are_distinct_and_component_independent():
    base = SampleConfig(seed=42, m=10_000)
    other = SampleConfig(seed=42, m=10_000, stream=1)
    a = simulate_mac(1.0, 1.0, CH, base)
    b = simulate_mac(1.0, 1.0, CH, other)
    assert not np.array_equal(a.y, b.y)
    # silencing user 2 must not reshuffle user 1 or the noise substream;
    # with both users silent the output is the raw noise draw itself
    c = simulate_mac(1.0, 0.0, CH, base)
    noise_only = simulate_mac(0.0, 0.0, CH, base)
    assert np.array_equal(a.x1, c.x1)
    assert np.all(c.x2 == 0.0)
    assert np.array_equal(a.y, a.x1 + a.x2 + noise_only.y)
    assert np.array_equal(c.y, c.x1 + noise_only.y)


def test_zero_power_batch_is_pure_noise():
    cfg = SampleConfig(seed=3, m=1_000)
    batch = simulate_mac(0.0, 0.0, CH, cfg)
    assert np.all(batch.x1 == 0.0) and np.all(batch.x2 == 0.0)
    assert abs(np.var(batch.y) - 1.0) <= 5 * _var_se(1.0, batch.m)


def test_variance_bookkeeping():
    cfg = SampleConfig(seed=42, m=1_000_000)
    batch = simulate_mac(1.0, 1.0, CH, cfg)
    assert batch.m == 1_000_000
    assert abs(np.var(batch.x1) - 1.0) <= 5 * _var_se(1.0, batch.m)
    assert abs(np.var(batch.x2) - 1.0) <= 5 * _var_se(1.0, batch.m)
    assert abs(np.var(batch.y) - 3.0) <= 5 * _var_se(3.0, batch.m)


def test_simulate_mac_rejects_bad_powers():
    cfg = SampleConfig(seed=1, m=100)
    with pytest.raises(ValueError):
        simulate_mac(-1.0, 1.0, CH, cfg)
    with pytest.raises(ValueError):
        simulate_mac(1.0, float("nan"), CH, cfg)


def test_sic_cancel_removes_the_chosen_signal():
    cfg = SampleConfig(seed=42, m=1_000_000)
    batch = simulate_mac(1.0, 1.0, CH, cfg)
    res2 = sic_cancel(batch, 2)
    assert np.array_equal(res2, batch.y - batch.x2)
    assert abs(np.var(res2) - 2.0) <= 5 * _var_se(2.0, batch.m)
    both = sic_cancel(batch, 2) - batch.x1
    assert abs(np.var(both) - 1.0) <= 5 * _var_se(1.0, batch.m)
    with pytest.raises(ValueError):
        sic_cancel(batch, 3)


def test_sic_cancel_noop_for_silent_user():
    batch = simulate_mac(1.0, 0.0, CH, SampleConfig(seed=5, m=1_000))
    assert np.array_equal(sic_cancel(batch, 2), batch.y)


def test_plugin_estimates_match_analytic_rates():
    cfg = SampleConfig(seed=42, m=1_000_000)
    batch = simulate_mac(1.0, 1.0, CH, cfg)
    u2 = mi_plugin_gaussian(batch, "user2_with_user1_interference")
    assert u2.value == pytest.approx(0.5849625007211562, abs=0.01)
    assert u2.method == "plugin" and u2.m == batch.m
    joint = mi_plugin_gaussian(batch, "joint")
    assert joint.value == pytest.approx(1.5849625007211563, abs=0.01)
    u1 = mi_plugin_gaussian(batch, "user1")
    assert u1.value == pytest.approx(1.0, abs=0.01)
    targets = ((u1, 1.0), (u2, sic_rate(1.0, 1.0, CH)),
               (joint, shannon_rate(2.0, CH)))
    for est, target in targets:
        assert est.std_error > 0
        assert abs(est.value - target) <= 3 * est.std_error


def test_plugin_chain_telescopes():
    cfg = SampleConfig(seed=9, m=200_000)
    for p1, p2 in [(1.0, 1.0), (10.0, 0.1), (0.25, 4.0)]:
        batch = simulate_mac(p1, p2, CH, cfg)
        u1 = mi_plugin_gaussian(batch, "user1").value
        u2 = mi_plugin_gaussian(batch, "user2_with_user1_interference").value
        joint = mi_plugin_gaussian(batch, "joint").value
        # shared sample variances make the decomposition an identity
        assert u1 + u2 == pytest.approx(joint, abs=1e-12)


def test_plugin_zero_power_target_is_exactly_zero():
    batch = simulate_mac(1.0, 0.0, CH, SampleConfig(seed=11, m=10_000))
    est = mi_plugin_gaussian(batch, "user2_with_user1_interference")
    assert est.value == 0.0
    assert est.std_error == 0.0


def test_plugin_guards():
    batch = simulate_mac(1.0, 1.0, CH, SampleConfig(seed=1, m=99))
    with pytest.raises(ValueError):
        mi_plugin_gaussian(batch, "joint")
    batch = simulate_mac(1.0, 1.0, CH, SampleConfig(seed=1, m=1_000))
    with pytest.raises(ValueError):
        mi_plugin_gaussian(batch, "both_users")


def test_entropy_knn_gaussian_reference():
    samples = np.random.default_rng(123).normal(0.0, 1.0, 1_000_000)
    h = entropy_knn(samples)
    assert h == pytest.approx(2.047095585180641, abs=0.02)


def test_entropy_knn_uniform_reference():
    samples = np.random.default_rng(123).uniform(0.0, 1.0, 1_000_000)
    assert entropy_knn(samples) == pytest.approx(0.0, abs=0.02)
    # scaling a density by s shifts its entropy by log2(s)
    assert entropy_knn(4.0 * samples) == pytest.approx(2.0, abs=0.02)


def test_entropy_knn_guards():
    with pytest.raises(ValueError):
        entropy_knn(np.ones(100))  # duplicate samples
    with pytest.raises(ValueError):
        entropy_knn(np.arange(4.0), k=4)  # need k+1 samples
    with pytest.raises(ValueError):
        entropy_knn(np.arange(10.0), k=0)
    with pytest.raises(ValueError):
        entropy_knn(np.zeros((10, 2)))


def test_knn_and_plugin_agree_on_gaussian_mixture():
    batch = simulate_mac(1.0, 1.0, CH, SampleConfig(seed=7, m=1_000_000))
    plug = mi_plugin_gaussian(batch, "user2_with_user1_interference")
    # the plug-in counts a channel use as two real dimensions, the entropy
    # difference is per real sample: factor of two between conventions
    knn = 2.0 * (entropy_knn(batch.y) - entropy_knn(sic_cancel(batch, 2)))
    assert abs(knn - plug.value) <= max(0.02, 3.0 * plug.std_error)


def test_validate_sic_chain_passes_at_reference_config():
    report = validate_sic_chain(1.0, 1.0, CH, SampleConfig(seed=42, m=1_000_000))
    assert report.passed
    names = [c.name for c in report.checks]
    assert names == [
        "user2_with_user1_interference",
        "user1_after_cancellation",
        "joint",
        "chain_identity",
    ]
    by_name = {c.name: c for c in report.checks}
    assert by_name["user1_after_cancellation"].target == 1.0
    assert by_name["user2_with_user1_interference"].target == 0.5849625007211562
    assert by_name["joint"].target == 1.5849625007211563
    for c in report.checks:
        assert abs(c.estimate - c.target) <= c.tolerance
    assert "not decodability" in report.note


def test_validate_sic_chain_single_user_degenerates():
    report = validate_sic_chain(1.0, 0.0, CH, SampleConfig(seed=7, m=100_000))
    assert report.passed
    by_name = {c.name: c for c in report.checks}
    assert by_name["user2_with_user1_interference"].estimate == 0.0
    assert by_name["chain_identity"].estimate == by_name["joint"].estimate


def test_validate_sic_chain_asymmetric_snr():
    report = validate_sic_chain(10.0, 0.1, CH,
                                SampleConfig(seed=42, m=1_000_000), tol=0.02)
    assert report.passed
    by_name = {c.name: c for c in report.checks}
    assert by_name["joint"].target == shannon_rate(10.1, CH)
    assert by_name["user2_with_user1_interference"].target == sic_rate(0.1, 10.0, CH)


def test_validate_sic_chain_rejects_bad_tol():
    with pytest.raises(ValueError):
        validate_sic_chain(1.0, 1.0, CH, SampleConfig(seed=1, m=1_000), tol=0.0)


def test_validation_report_consistency_enforced():
    check = RateCheck("joint", 1.0, 0.01, 1.0, 0.01, True)
    with pytest.raises(ValueError):
        ValidationReport(checks=(check,), passed=False, note="")
