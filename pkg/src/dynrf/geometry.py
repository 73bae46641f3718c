"""Poisson deployments of ambient transmitters around the harvester."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class TransmitterSite:
    distance: float  # m
    bearing: float  # rad w.r.t. array boresight, in [-pi/2, pi/2]


@dataclass(frozen=True)
class Deployment:
    sites: tuple[TransmitterSite, ...]
    density: float
    region_radius: float
    distances: np.ndarray = field(repr=False, compare=False, default=None)
    bearings: np.ndarray = field(repr=False, compare=False, default=None)

    def __post_init__(self):
        # array views for vectorized channel generation
        if self.distances is None:
            object.__setattr__(self, "distances", np.array([s.distance for s in self.sites], dtype=float))
        if self.bearings is None:
            object.__setattr__(self, "bearings", np.array([s.bearing for s in self.sites], dtype=float))

    def __len__(self) -> int:
        return len(self.sites)

    @property
    def mean_count(self) -> float:
        return self.density * np.pi * self.region_radius**2


def fold_bearing(angle):
    """Mirror angles behind the array onto the front half-plane.

    A linear array only sees ``sin(angle)``, so ``pi - angle`` is the
    equivalent front-side bearing.
    """
    angle = np.asarray(angle, dtype=float)
    angle = np.where(np.abs(angle) <= np.pi, angle, np.mod(angle + np.pi, 2 * np.pi) - np.pi)
    folded = np.where(angle > np.pi / 2, np.pi - angle, angle)
    folded = np.where(folded < -np.pi / 2, -np.pi - folded, folded)
    return folded


def draw_deployment(density: float, region_radius: float, rng: np.random.Generator) -> Deployment:
    """Drop a homogeneous PPP realization on the disk around the origin.

    The site count is Poisson with mean ``density * pi * region_radius**2``;
    positions are uniform on the disk. The array boresight is the +x axis.
    Sites are returned sorted by increasing distance.
    """
    if density < 0:
        raise ValueError(f"density must be non-negative, got {density}")
    if region_radius <= 0:
        raise ValueError(f"region_radius must be positive, got {region_radius}")

    count = rng.poisson(density * np.pi * region_radius**2)
    r = region_radius * np.sqrt(rng.random(count))
    phi = rng.uniform(-np.pi, np.pi, count)
    x, y = r * np.cos(phi), r * np.sin(phi)

    distance = np.hypot(x, y)
    bearing = fold_bearing(np.arctan2(y, x))
    order = np.argsort(distance, kind="stable")
    distance, bearing = distance[order], bearing[order]

    sites = tuple(TransmitterSite(float(d), float(a)) for d, a in zip(distance, bearing))
    return Deployment(sites, float(density), float(region_radius), distance, bearing)
