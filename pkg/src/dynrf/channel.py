"""Rician narrowband channels seen by a half-wavelength ULA."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import Deployment, TransmitterSite

PATHLOSS_1M = 1e-4  # 40 dB distance-independent loss at 2.44 GHz
PATHLOSS_EXPONENT = 2.7


@dataclass(frozen=True)
class ChannelMatrix:
    """Per-source channel vectors, one row per site.

    ``entries[i, j]`` is in sqrt(W): ``|entries[i, j]|**2`` is the power
    source ``i`` delivers to antenna ``j``.
    """

    entries: np.ndarray
    source_sites: Deployment | None = None

    def __post_init__(self):
        h = np.asarray(self.entries, dtype=complex)
        if h.ndim != 2 or h.shape[1] < 1:
            raise ValueError(f"channel entries must be S x M with M >= 1, got shape {h.shape}")
        if not np.all(np.isfinite(h)):
            raise ValueError("channel entries must be finite")
        if self.source_sites is not None and len(self.source_sites) != h.shape[0]:
            raise ValueError("row count does not match the deployment's site count")
        object.__setattr__(self, "entries", h)

    @property
    def S(self) -> int:
        return self.entries.shape[0]

    @property
    def M(self) -> int:
        return self.entries.shape[1]


def pathloss(distance):
    """Log-distance gain ``1e-4 * max(d, 1)**-2.7``."""
    d = np.maximum(np.asarray(distance, dtype=float), 1.0)
    out = PATHLOSS_1M * d**-PATHLOSS_EXPONENT
    return out if out.ndim else float(out)


def rician_factor(distance, near_dB=14.0, far_dB=-4.0, near_m=1.0, far_m=10.0):
    """Distance-dependent LOS factor, linear in dB through two anchors.

    With the default anchors this is ``10**((16 - 2 d) / 10)``:
    14 dB at 1 m and -4 dB at 10 m.
    """
    d = np.asarray(distance, dtype=float)
    slope = (far_dB - near_dB) / (far_m - near_m)
    out = 10.0 ** ((near_dB + slope * (d - near_m)) / 10.0)
    return out if out.ndim else float(out)


def steering_vector(bearing: float, M: int) -> np.ndarray:
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    return np.exp(-1j * np.pi * np.arange(M) * np.sin(bearing))


def _steering_matrix(bearings: np.ndarray, M: int) -> np.ndarray:
    return np.exp(-1j * np.pi * np.outer(np.sin(bearings), np.arange(M)))


def _rician_rows(distances, bearings, M, p, kappa, w):
    beta = pathloss(distances)
    a = _steering_matrix(bearings, M)
    kappa = np.asarray(kappa, dtype=float)
    los_only = np.isinf(kappa)
    k = np.where(los_only, 0.0, kappa)
    scale = np.sqrt(p * beta / (1.0 + k))
    h = scale[:, None] * (np.sqrt(k)[:, None] * a + w)
    if np.any(los_only):
        h[los_only] = np.sqrt(p * beta[los_only])[:, None] * a[los_only]
    return h


def _complex_normal(rng: np.random.Generator, M: int, S: int) -> np.ndarray:
    # antenna-major draw: the first M' < M antennas reuse the same variates,
    # so arrays of different size share fading (common random numbers)
    z = rng.standard_normal((M, S, 2))
    return ((z[..., 0] + 1j * z[..., 1]) / np.sqrt(2.0)).T


def draw_channel(site: TransmitterSite, M: int, p: float, rng: np.random.Generator,
                 kappa: float | None = None, **kappa_model) -> np.ndarray:
    """Draw one Rician channel vector of length ``M``.

    ``h = sqrt(p beta / (1 + kappa)) * (sqrt(kappa) a + w)`` with ``w`` iid
    CN(0, 1), so ``E|h_j|^2 = p beta`` on every antenna. Pass
    ``kappa=np.inf`` for the pure LOS vector ``sqrt(p beta) a``; otherwise
    the factor follows :func:`rician_factor` (anchors via ``kappa_model``).
    """
    if p <= 0:
        raise ValueError(f"p must be positive, got {p}")
    if kappa is None:
        kappa = rician_factor(site.distance, **kappa_model)
    w = _complex_normal(rng, M, 1)
    h = _rician_rows(np.array([site.distance]), np.array([site.bearing]), M, p, [kappa], w)
    return h[0]


def draw_channel_matrix(deployment: Deployment, M: int, p: float, rng: np.random.Generator,
                        kappa: float | None = None, **kappa_model) -> ChannelMatrix:
    """Stack one independent Rician row per site of ``deployment``."""
    if p <= 0:
        raise ValueError(f"p must be positive, got {p}")
    S = len(deployment)
    w = _complex_normal(rng, M, S)
    if S == 0:
        return ChannelMatrix(np.zeros((0, M), dtype=complex), deployment)
    if kappa is None:
        k = rician_factor(deployment.distances, **kappa_model)
    else:
        k = np.full(S, float(kappa))
    h = _rician_rows(deployment.distances, deployment.bearings, M, p, k, w)
    return ChannelMatrix(h, deployment)
