"""Harvested DC power behind the passive RF combiner."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channel import ChannelMatrix

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class PhaseConfig:
    """Phase shifts and connection mask of the M antenna branches.

    ``bits`` is the shifter resolution the configuration was drawn for,
    or ``None`` for continuous phases. Antenna 0 is the reference branch:
    it has no shifter (phase 0) and is always connected.
    """

    phases: np.ndarray
    connected: np.ndarray = None
    bits: int | None = None

    def __post_init__(self):
        phases = np.mod(np.asarray(self.phases, dtype=float), TWO_PI)
        # fold values that round to 2*pi back onto 0
        phases[np.isclose(phases, TWO_PI, rtol=0, atol=1e-12)] = 0.0
        if phases.ndim != 1 or phases.size < 1:
            raise ValueError("phases must be a non-empty vector")
        if phases[0] != 0.0:
            raise ValueError("reference antenna phase must be 0")
        connected = np.ones(phases.size, dtype=bool) if self.connected is None else np.asarray(self.connected, dtype=bool)
        if connected.shape != phases.shape:
            raise ValueError("connected mask must match phases")
        if not connected[0]:
            raise ValueError("reference antenna must stay connected")
        object.__setattr__(self, "phases", phases)
        object.__setattr__(self, "connected", connected)

    @property
    def M(self) -> int:
        return self.phases.size

    def weights(self, delta) -> np.ndarray:
        """Complex branch gains ``sqrt(delta_j) exp(i theta_j)``, zero if disconnected."""
        return np.where(self.connected, np.sqrt(delta) * np.exp(1j * self.phases), 0.0)


@dataclass(frozen=True)
class LossProfile:
    delta: np.ndarray

    def __post_init__(self):
        delta = np.asarray(self.delta, dtype=float)
        if delta.ndim != 1 or np.any(delta <= 0) or np.any(delta > 1):
            raise ValueError("insertion-loss gains must lie in (0, 1]")
        object.__setattr__(self, "delta", delta)


def insertion_loss_vector(M: int, B: int, delta0: float, ideal: bool = False) -> LossProfile:
    """Per-branch power gains: 1 on the reference, ``delta0**B`` elsewhere."""
    if not 0.0 < delta0 <= 1.0:
        raise ValueError(f"delta0 must lie in (0, 1], got {delta0}")
    if B < 0:
        raise ValueError(f"B must be non-negative, got {B}")
    delta = np.ones(M)
    if not ideal:
        delta[1:] = delta0**B
    return LossProfile(delta)


def linear_eh(x):
    """Rectifier transfer ``g``: DC power is ``|x|**2`` scaled by the efficiency outside."""
    return np.abs(x) ** 2


def combined_powers(H, weights, eta: float, g=linear_eh) -> np.ndarray:
    """Harvested power for a batch of branch-weight vectors.

    Parameters
    ----------
    H : (S, M) complex array
    weights : (C, M) complex array
        Row ``c`` holds ``sqrt(delta_j) exp(i theta_j)`` (zero when disconnected).

    Returns
    -------
    (C,) array of watts, ``eta / M * sum_i g(sum_j w_cj H_ij)``.

    The 1/M passive-combiner factor is fixed by the antenna count and does
    not change when branches are switched off.
    """
    H = np.asarray(H)
    weights = np.atleast_2d(weights)
    M = H.shape[1]
    if weights.shape[1] != M:
        raise ValueError(f"weights have {weights.shape[1]} branches, channel has {M}")
    if H.shape[0] == 0:
        return np.zeros(weights.shape[0])
    y = weights @ H.T  # (C, S)
    return eta / M * g(y).sum(axis=1)


def harvested_power(H: ChannelMatrix | np.ndarray, config: PhaseConfig, loss: LossProfile, eta: float) -> float:
    """Expected harvested DC power (W) for one phase configuration.

    Independent unit-power source waveforms make cross-source terms vanish,
    so the combiner output power is the per-source sum of ``|w^T h_i|^2``.
    """
    h = H.entries if isinstance(H, ChannelMatrix) else np.asarray(H, dtype=complex)
    if h.ndim != 2:
        raise ValueError("channel must be an S x M array")
    if h.shape[1] != config.M or loss.delta.size != config.M:
        raise ValueError(f"dimension mismatch: channel M={h.shape[1]}, config M={config.M}, loss M={loss.delta.size}")
    if not 0.0 < eta <= 1.0:
        raise ValueError(f"eta must lie in (0, 1], got {eta}")
    return float(combined_powers(h, config.weights(loss.delta), eta)[0])


def energy_over(power: float, duration: float) -> float:
    if duration < 0:
        raise ValueError("duration must be non-negative")
    return power * duration
