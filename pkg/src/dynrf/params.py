"""Physical, circuit and protocol constants shared by every scheme."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace


def db_to_linear(value_db: float) -> float:
    return 10.0 ** (value_db / 10.0)


def linear_to_db(value: float) -> float:
    return 10.0 * math.log10(value)


@dataclass(frozen=True)
class SimParams:
    """Constants of one simulated harvesting interval.

    Defaults are the WiFi-band scenario: 0.1 W ambient transmitters,
    10 nW per shifter bit, 80 nW meter, 0.5 % measurement slots,
    -0.5 dB insertion loss per bit, 50 % conversion efficiency and a
    normalized 1 s interval.

    Attributes
    ----------
    T : float
        Interval length ``t2 - t1`` in seconds.
    dt_fraction : float
        Measurement slot length as a fraction of ``T``.
    P0 : float
        Static power per phase-shifter bit (W).
    P_meter : float
        Energy-meter power while measuring (W).
    P_switch : float
        Per-antenna switch power during sequential testing (W).
    delta0 : float
        Linear insertion-loss gain per bit, in (0, 1].
    eta : float
        RF-to-DC conversion efficiency.
    p : float
        Transmit power of every ambient source (W).
    M, B : int
        Antenna count and phase-shifter bit resolution.
    region_radius : float
        Radius (m) of the disk on which transmitters are dropped.
    kappa_near_dB, kappa_far_dB : float
        Rician factor at ``kappa_near_m`` and ``kappa_far_m``; the factor is
        linear in dB between (and beyond) the two anchor distances.
    """

    T: float = 1.0
    dt_fraction: float = 0.005
    P0: float = 10e-9
    P_meter: float = 80e-9
    P_switch: float = 10e-9
    delta0: float = db_to_linear(-0.5)
    eta: float = 0.5
    p: float = 0.1
    M: int = 4
    B: int = 2
    region_radius: float = 100.0
    kappa_near_dB: float = 14.0
    kappa_far_dB: float = -4.0
    kappa_near_m: float = 1.0
    kappa_far_m: float = 10.0

    def __post_init__(self):
        if not 0.0 < self.dt_fraction < 1.0:
            raise ValueError(f"dt_fraction must lie in (0, 1), got {self.dt_fraction}")
        if self.T <= 0:
            raise ValueError(f"T must be positive, got {self.T}")
        for name in ("P0", "P_meter", "P_switch"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        if not 0.0 < self.delta0 <= 1.0:
            raise ValueError(f"delta0 must lie in (0, 1], got {self.delta0}")
        if not 0.0 < self.eta <= 1.0:
            raise ValueError(f"eta must lie in (0, 1], got {self.eta}")
        if self.p <= 0:
            raise ValueError(f"p must be positive, got {self.p}")
        if self.M < 1:
            raise ValueError(f"M must be >= 1, got {self.M}")
        if self.B < 1:
            raise ValueError(f"B must be >= 1, got {self.B}")
        if self.region_radius <= 0:
            raise ValueError("region_radius must be positive")
        if self.kappa_far_m <= self.kappa_near_m or self.kappa_near_m <= 0:
            raise ValueError("need 0 < kappa_near_m < kappa_far_m")

    @property
    def dt(self) -> float:
        """Length of one measurement slot in seconds."""
        return self.dt_fraction * self.T

    def with_(self, **changes) -> SimParams:
        return replace(self, **changes)
