"""Flat ``key = value`` run configuration.

Blank lines and ``#`` comments are ignored. Lists are comma separated.
dB-valued keys (``delta0_dB``, ``kappa_*_dB``) are kept as written and
converted to linear gains when :attr:`RunConfig.params` is built.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, fields
from pathlib import Path

import numpy as np

from .montecarlo import DEFAULT_B_CANDIDATES, DEFAULT_TRIALS, SweepSpec
from .params import SimParams, db_to_linear
from .schemes import SCHEMES


class ConfigError(ValueError):
    """Malformed, unknown or out-of-range configuration entry."""


def _default_lambdas():
    return tuple(float(x) for x in np.logspace(-5, -2, 7))


@dataclass(frozen=True)
class RunConfig:
    T: float = 1.0
    dt_fraction: float = 0.005
    P0: float = 10e-9
    P_meter: float = 80e-9
    P_switch: float = 10e-9
    delta0_dB: float = -0.5
    eta: float = 0.5
    p: float = 0.1
    M: int = 4
    B: int = 2
    region_radius: float = 100.0
    kappa_near_dB: float = 14.0
    kappa_far_dB: float = -4.0
    kappa_near_m: float = 1.0
    kappa_far_m: float = 10.0
    density: float = 10**-2.8
    lambdas: tuple[float, ...] = field(default_factory=_default_lambdas)
    antennas: tuple[int, ...] = (2, 3, 4, 5, 6, 7, 8)
    trials: int = DEFAULT_TRIALS
    schemes: tuple[str, ...] = SCHEMES
    B_candidates: tuple[int, ...] = DEFAULT_B_CANDIDATES
    master_seed: int = 0
    workers: int = 1
    out: str = ""

    @property
    def params(self) -> SimParams:
        return SimParams(
            T=self.T, dt_fraction=self.dt_fraction, P0=self.P0, P_meter=self.P_meter,
            P_switch=self.P_switch, delta0=db_to_linear(self.delta0_dB), eta=self.eta, p=self.p,
            M=self.M, B=self.B, region_radius=self.region_radius,
            kappa_near_dB=self.kappa_near_dB, kappa_far_dB=self.kappa_far_dB,
            kappa_near_m=self.kappa_near_m, kappa_far_m=self.kappa_far_m,
        )

    def sweep_spec(self, variable: str) -> SweepSpec:
        values = self.lambdas if variable == "density" else self.antennas
        return SweepSpec(variable, tuple(values), self.trials, tuple(self.schemes), tuple(self.B_candidates),
                         self.params, self.master_seed, self.density, self.workers)


def _positive(x):
    return x > 0


def _non_negative(x):
    return x >= 0


# key -> (check, description of the valid range)
_RANGES = {
    "T": (_positive, "> 0"),
    "dt_fraction": (lambda x: 0 < x < 1, "in (0, 1)"),
    "P0": (_non_negative, ">= 0"),
    "P_meter": (_non_negative, ">= 0"),
    "P_switch": (_non_negative, ">= 0"),
    "delta0_dB": (lambda x: x <= 0, "<= 0"),
    "eta": (lambda x: 0 < x <= 1, "in (0, 1]"),
    "p": (_positive, "> 0"),
    "M": (lambda x: x >= 1, ">= 1"),
    "B": (lambda x: x >= 1, ">= 1"),
    "region_radius": (_positive, "> 0"),
    "kappa_near_m": (_positive, "> 0"),
    "kappa_far_m": (_positive, "> 0"),
    "density": (_non_negative, ">= 0"),
    "lambdas": (lambda xs: len(xs) > 0 and all(x >= 0 for x in xs), "non-empty, each >= 0"),
    "antennas": (lambda xs: len(xs) > 0 and all(x >= 1 for x in xs), "non-empty, each >= 1"),
    "trials": (lambda x: x >= 1, ">= 1"),
    "schemes": (lambda xs: len(xs) > 0 and all(s in SCHEMES for s in xs), f"non-empty subset of {','.join(SCHEMES)}"),
    "B_candidates": (lambda xs: len(xs) > 0 and all(b >= 1 for b in xs), "non-empty, each >= 1"),
    "master_seed": (lambda x: 0 <= x < 2**64, "in [0, 2**64)"),
    "workers": (lambda x: x >= 1, ">= 1"),
}

_FIELDS = {f.name: f for f in fields(RunConfig)}


def _parse_value(key: str, text: str):
    kind = _FIELDS[key].type
    if kind == "str":
        return text
    if kind.startswith("tuple"):
        items = [t.strip() for t in text.split(",") if t.strip()]
        inner = kind[len("tuple["):].split(",")[0]
        conv = {"float": float, "int": int, "str": str}[inner]
        return tuple(conv(t) for t in items)
    value = {"float": float, "int": int}[kind](text)
    if isinstance(value, float) and not math.isfinite(value):
        raise ValueError("not finite")
    return value


def parse_config(text: str, source: str = "<config>") -> RunConfig:
    values, lines = {}, {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value', got {raw.strip()!r}")
        key, _, value = (part.strip() for part in line.partition("="))
        if key not in _FIELDS:
            raise ConfigError(f"{source}:{lineno}: unknown key {key!r}")
        if key in values:
            raise ConfigError(f"{source}:{lineno}: duplicate key {key!r} (first set on line {lines[key]})")
        try:
            parsed = _parse_value(key, value)
        except ValueError:
            raise ConfigError(f"{source}:{lineno}: malformed value for {key!r}: {value!r}") from None
        check = _RANGES.get(key)
        if check and not check[0](parsed):
            raise ConfigError(f"{source}:{lineno}: {key} = {value} out of range (must be {check[1]})")
        values[key], lines[key] = parsed, lineno

    config = RunConfig(**values)
    if config.kappa_far_m <= config.kappa_near_m:
        where = lines.get("kappa_far_m", lines.get("kappa_near_m"))
        prefix = f"{source}:{where}" if where else source
        raise ConfigError(f"{prefix}: kappa_far_m must exceed kappa_near_m")
    return config


def load_config(path) -> RunConfig:
    path = Path(path)
    return parse_config(path.read_text(), str(path))


def emit_config(config: RunConfig) -> str:
    out = []
    for f in fields(config):
        value = getattr(config, f.name)
        if isinstance(value, tuple):
            text = ",".join(repr(v) if not isinstance(v, str) else v for v in value)
        elif isinstance(value, str):
            text = value
        else:
            text = repr(value)
        out.append(f"{f.name} = {text}")
    return "\n".join(out) + "\n"
