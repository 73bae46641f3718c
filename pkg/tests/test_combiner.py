import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from dynrf import (ChannelMatrix, LossProfile, PhaseConfig, db_to_linear, energy_over, harvested_power,
                   insertion_loss_vector)
from oracles import power as oracle_power

DELTA0 = db_to_linear(-0.5)

finite = st.floats(-3, 3, allow_nan=False)


@st.composite
def channels(draw, max_S=4, max_M=5):
    shape = (draw(st.integers(1, max_S)), draw(st.integers(1, max_M)))
    return draw(arrays(float, shape, elements=finite)) + 1j * draw(arrays(float, shape, elements=finite))


def lossless(M):
    return insertion_loss_vector(M, 1, 1.0, ideal=True)


def test_insertion_loss_vector():
    loss = insertion_loss_vector(4, 2, DELTA0)
    np.testing.assert_allclose(loss.delta, [1, 0.794, 0.794, 0.794], atol=5e-4)
    assert loss.delta[1] == pytest.approx(DELTA0**2)
    np.testing.assert_array_equal(insertion_loss_vector(5, 3, DELTA0, ideal=True).delta, np.ones(5))
    np.testing.assert_array_equal(insertion_loss_vector(1, 4, DELTA0).delta, [1.0])


@pytest.mark.parametrize("bad", [0.0, -0.1, 1.01])
def test_insertion_loss_rejects_bad_delta0(bad):
    with pytest.raises(ValueError):
        insertion_loss_vector(3, 2, bad)


def test_phase_config_invariants():
    with pytest.raises(ValueError):
        PhaseConfig(np.array([0.5, 0.0]))
    with pytest.raises(ValueError):
        PhaseConfig(np.array([0.0, 1.0]), connected=np.array([False, True]))
    cfg = PhaseConfig(np.array([0.0, -np.pi / 2]))
    assert cfg.phases[1] == pytest.approx(3 * np.pi / 2)
    assert cfg.connected.all()


def test_hand_examples():
    H = np.array([[1.0, 1.0]])
    assert harvested_power(H, PhaseConfig([0.0, np.pi]), lossless(2), 0.5) == pytest.approx(0.0, abs=1e-30)
    assert harvested_power(H, PhaseConfig([0.0, 0.0]), lossless(2), 0.5) == pytest.approx(1.0, rel=1e-15)


def test_no_sources_no_power():
    H = ChannelMatrix(np.zeros((0, 3), dtype=complex))
    assert harvested_power(H, PhaseConfig(np.zeros(3)), lossless(3), 0.5) == 0.0


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        harvested_power(np.ones((1, 3)), PhaseConfig(np.zeros(2)), lossless(2), 0.5)
    with pytest.raises(ValueError):
        harvested_power(np.ones((1, 2)), PhaseConfig(np.zeros(2)), lossless(3), 0.5)


def test_normalization_fixed_when_disconnected():
    H = np.array([[1.0, 2.0, 3.0]])
    cfg = PhaseConfig(np.zeros(3), connected=[True, True, False])
    # 1/M stays 1/3 with one branch switched off
    assert harvested_power(H, cfg, lossless(3), 1.0) == pytest.approx(9.0 / 3)


@settings(max_examples=60, deadline=None)
@given(channels(), st.floats(0, 2 * np.pi), st.data())
def test_matches_oracle_and_global_phase_invariance(H, shift, data):
    M = H.shape[1]
    phases = np.array([0.0] + data.draw(st.lists(st.floats(0, 2 * np.pi), min_size=M - 1, max_size=M - 1)))
    loss = insertion_loss_vector(M, 2, DELTA0)
    p = harvested_power(H, PhaseConfig(phases), loss, 0.5)
    assert p == pytest.approx(oracle_power(H.tolist(), phases.tolist(), loss.delta.tolist(), 0.5), rel=1e-9, abs=1e-12)
    # rotating every branch leaves each |y_i| unchanged; apply via the channel
    rotated = H * np.exp(1j * shift)
    assert harvested_power(rotated, PhaseConfig(phases), loss, 0.5) == pytest.approx(p, rel=1e-12, abs=1e-12)


@settings(max_examples=60, deadline=None)
@given(channels(), st.data())
def test_triangle_upper_bound(H, data):
    M = H.shape[1]
    phases = np.array([0.0] + data.draw(st.lists(st.floats(0, 2 * np.pi), min_size=M - 1, max_size=M - 1)))
    loss = insertion_loss_vector(M, 3, DELTA0)
    bound = 0.5 / M * np.sum((np.abs(H) @ np.sqrt(loss.delta)) ** 2)
    assert harvested_power(H, PhaseConfig(phases), loss, 0.5) <= bound * (1 + 1e-12) + 1e-15


def test_triangle_bound_attained_for_single_source(rng):
    h = rng.standard_normal(5) + 1j * rng.standard_normal(5)
    loss = insertion_loss_vector(5, 2, DELTA0)
    phases = np.angle(h[0]) - np.angle(h)
    p = harvested_power(h[None, :], PhaseConfig(phases - phases[0]), loss, 0.5)
    assert p == pytest.approx(0.5 / 5 * (np.abs(h) @ np.sqrt(loss.delta)) ** 2, rel=1e-12)


@settings(max_examples=60, deadline=None)
@given(arrays(float, 4, elements=finite), arrays(float, 4, elements=finite),
       arrays(float, 4, elements=st.floats(0.05, 1.0)), arrays(float, 4, elements=st.floats(0.0, 1.0)))
def test_monotone_in_loss_when_cophased(re, im, d_hi, shrink):
    # single source, branches co-phased: every term adds constructively
    h = re + 1j * im
    phases = np.angle(h[0]) - np.angle(h)
    cfg = PhaseConfig(phases - phases[0])
    d_hi = d_hi.copy()
    d_hi[0] = 1.0
    d_lo = d_hi * np.maximum(shrink, 0.01)
    d_lo[0] = 1.0
    lo = harvested_power(h[None, :], cfg, LossProfile(d_lo), 0.5)
    hi = harvested_power(h[None, :], cfg, LossProfile(d_hi), 0.5)
    assert lo <= hi * (1 + 1e-12) + 1e-15


def test_disconnected_reduces_to_reference(rng):
    from oracles import random_channel

    H = random_channel(rng, 3, 4)
    cfg = PhaseConfig(rng.uniform(0, 2 * np.pi, 4) * [0, 1, 1, 1], connected=[True, False, False, False])
    p = harvested_power(H, cfg, insertion_loss_vector(4, 2, DELTA0), 0.5)
    assert p == pytest.approx(0.5 / 4 * np.sum(np.abs(H[:, 0]) ** 2), rel=1e-12)


def test_energy_over():
    assert energy_over(1.0, 0.0) == 0.0
    assert energy_over(2.0, 0.5) == 1.0
    assert energy_over(3.0, 0.2) + energy_over(3.0, 0.3) == pytest.approx(energy_over(3.0, 0.5))
    with pytest.raises(ValueError):
        energy_over(1.0, -1.0)
