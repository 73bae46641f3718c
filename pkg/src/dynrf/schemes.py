"""Phase-exploration schemes and benchmarks with full energy accounting.

Every runner takes one channel realization and a :class:`SimParams` and
returns a :class:`SchemeResult`. Measured powers are expected powers (the
measurement slot is assumed long enough to average out the waveforms).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import ChannelMatrix
from .codebook import bits_for, dft_phases, uniform_grid
from .combiner import LossProfile, PhaseConfig, combined_powers, harvested_power, insertion_loss_vector
from .params import SimParams

GA_EXHAUSTIVE_LIMIT = 10**6
GA_RESTARTS = 8
GA_REL_TOL = 1e-10
GA_MAX_SWEEPS = 10_000
_CHUNK = 1 << 15


@dataclass(frozen=True)
class SchemeResult:
    """Energy ledger of one scheme on one realization.

    Energies are joules. For infeasible runs (``N dt > T``) the energies and
    ``P_final`` are NaN and ``final_config`` is None.
    """

    scheme: str
    B_used: int | None
    N: int
    E_abs: float
    E_phase: float
    E_meter: float
    E_net: float
    final_config: PhaseConfig | None
    feasible: bool
    P_final: float = math.nan


def _entries(H) -> np.ndarray:
    return H.entries if isinstance(H, ChannelMatrix) else np.asarray(H, dtype=complex)


def is_feasible(N: int, params: SimParams) -> bool:
    return N * params.dt <= params.T


def exploration_ledger(powers_per_interval, final_power: float, N: int, params: SimParams, E_phase: float,
                       scheme: str = "", B_used: int | None = None,
                       final_config: PhaseConfig | None = None) -> SchemeResult:
    """Book the energy of an exploration phase followed by exploitation.

    ``E_abs`` collects each tested configuration's power over one slot plus
    the adopted configuration over the remaining ``T - N dt``; consumption
    is ``E_phase + N dt P_meter``.
    """
    if not is_feasible(N, params):
        nan = math.nan
        return SchemeResult(scheme, B_used, N, nan, nan, nan, nan, None, False)
    powers = np.asarray(powers_per_interval, dtype=float)
    if powers.size != N:
        raise ValueError(f"got {powers.size} measured powers for N={N}")
    dt = params.dt
    E_abs = float(powers.sum() * dt + final_power * (params.T - N * dt))
    E_meter = N * dt * params.P_meter
    E_net = E_abs - E_phase - E_meter
    return SchemeResult(scheme, B_used, N, E_abs, E_phase, E_meter, E_net, final_config, True, float(final_power))


def _infeasible(scheme, B_used, N) -> SchemeResult:
    nan = math.nan
    return SchemeResult(scheme, B_used, N, nan, nan, nan, nan, None, False)


def static_phase_energy(M: int, B: int, params: SimParams) -> float:
    """Shifter consumption ``(M-1) B P0`` sustained over the whole interval."""
    return (M - 1) * B * params.P0 * params.T


def _grid_configs(Q: int, n_free: int, start: int = 0, stop: int | None = None) -> np.ndarray:
    """Lexicographic rows of grid indices for the non-reference antennas."""
    total = Q**n_free
    stop = total if stop is None else min(stop, total)
    flat = np.arange(start, stop)
    if n_free == 0:
        return np.zeros((flat.size, 0), dtype=int)
    return np.stack(np.unravel_index(flat, (Q,) * n_free), axis=1)


def _weights_from_indices(idx: np.ndarray, grid: np.ndarray, delta: np.ndarray) -> np.ndarray:
    phases = np.concatenate([np.zeros((idx.shape[0], 1)), grid[idx]], axis=1)
    return np.sqrt(delta) * np.exp(1j * phases)


def _config(phases, bits, connected=None) -> PhaseConfig:
    return PhaseConfig(np.asarray(phases, dtype=float), connected, bits)


def run_brute_force(H, params: SimParams) -> SchemeResult:
    """Test every grid configuration of the M-1 shifters, keep the best.

    Configurations are enumerated lexicographically over antennas 2..M
    (last antenna fastest); ties go to the earliest configuration.
    """
    h = _entries(H)
    M, B = h.shape[1], params.B
    Q = 2**B
    N = Q ** (M - 1)
    if not is_feasible(N, params):
        return _infeasible("BF", B, N)
    grid = uniform_grid(B)
    loss = insertion_loss_vector(M, B, params.delta0)
    idx = _grid_configs(Q, M - 1)
    powers = combined_powers(h, _weights_from_indices(idx, grid, loss.delta), params.eta)
    best = int(np.argmax(powers))
    config = _config(np.concatenate([[0.0], grid[idx[best]]]), B)
    final = harvested_power(h, config, loss, params.eta)
    E_phase = static_phase_energy(M, B, params)
    return exploration_ledger(powers, final, N, params, E_phase, "BF", B, config)


def run_sequential(H, params: SimParams) -> SchemeResult:
    """Configure the shifters one antenna at a time.

    Only the reference antenna is connected at first. Antenna ``j`` is then
    connected next to the already configured ones and every grid phase is
    measured on it; the best (lowest grid index on ties) is frozen before
    moving to ``j + 1``. Antennas are visited in index order.
    """
    h = _entries(H)
    M, B = h.shape[1], params.B
    Q = 2**B
    N = (M - 1) * Q
    if not is_feasible(N, params):
        return _infeasible("ST", B, N)
    grid = uniform_grid(B)
    loss = insertion_loss_vector(M, B, params.delta0)
    phases = np.zeros(M)
    measured = []
    for j in range(1, M):
        connected = np.arange(M) <= j
        trial = np.tile(phases, (Q, 1))
        trial[:, j] = grid
        w = np.where(connected, np.sqrt(loss.delta) * np.exp(1j * trial), 0.0)
        p = combined_powers(h, w, params.eta)
        measured.append(p)
        phases[j] = grid[int(np.argmax(p))]
    powers = np.concatenate(measured) if measured else np.zeros(0)
    config = _config(phases, B)
    final = harvested_power(h, config, loss, params.eta)
    E_phase = static_phase_energy(M, B, params) + M * (M - 1) / 2 * params.dt * Q * params.P_switch
    return exploration_ledger(powers, final, N, params, E_phase, "ST", B, config)


def run_codebook(H, params: SimParams) -> SchemeResult:
    """Sweep the M DFT beams in index order and keep the strongest.

    Shifters need ``ceil(log2 M)`` bits; codeword phases are used exactly,
    also when M is not a power of two.
    """
    h = _entries(H)
    M = h.shape[1]
    B = bits_for(M)
    N = M
    if not is_feasible(N, params):
        return _infeasible("CB", B, N)
    loss = insertion_loss_vector(M, B, params.delta0)
    codewords = dft_phases(M)
    powers = combined_powers(h, np.sqrt(loss.delta) * np.exp(1j * codewords), params.eta)
    best = int(np.argmax(powers))
    config = _config(codewords[best], B or None)
    final = harvested_power(h, config, loss, params.eta)
    return exploration_ledger(powers, final, N, params, static_phase_energy(M, B, params), "CB", B, config)


def run_rigid(H, params: SimParams) -> SchemeResult:
    """Fixed passive pattern ``[0, pi, 0, pi, ...]`` with lossless branches."""
    h = _entries(H)
    M = h.shape[1]
    phases = np.pi * (np.arange(M) % 2)
    config = _config(phases, None)
    P = harvested_power(h, config, insertion_loss_vector(M, 0, 1.0, ideal=True), params.eta)
    return exploration_ledger([], P, 0, params, 0.0, "RC", 0, config)


def _grid_exhaustive(h, grid, delta, eta):
    Q, M = grid.size, h.shape[1]
    total = Q ** (M - 1)
    best_p, best_idx = -np.inf, None
    for start in range(0, total, _CHUNK):
        idx = _grid_configs(Q, M - 1, start, start + _CHUNK)
        p = combined_powers(h, _weights_from_indices(idx, grid, delta), eta)
        k = int(np.argmax(p))
        if p[k] > best_p:
            best_p, best_idx = p[k], idx[k]
    return np.concatenate([[0.0], grid[best_idx]])


def _grid_ascent(h, grid, delta, eta, start_idx):
    """Cyclic coordinate ascent over grid indices of antennas 2..M."""
    idx = np.array(start_idx)
    M = h.shape[1]
    amp = np.sqrt(delta)
    current = -np.inf
    while True:
        for j in range(1, M):
            trial = np.tile(np.concatenate([[0.0], grid[idx]]), (grid.size, 1))
            trial[:, j] = grid
            p = combined_powers(h, amp * np.exp(1j * trial), eta)
            idx[j - 1] = int(np.argmax(p))
        phases = np.concatenate([[0.0], grid[idx]])
        value = combined_powers(h, amp * np.exp(1j * phases), eta)[0]
        if value <= current:
            return phases, value
        current = value


def _continuous_ascent(h, phases):
    """Closed-form cyclic updates ``theta_j = -arg(sum_i conj(c_ij) H_ij)``."""
    phases = np.array(phases, dtype=float)
    M = h.shape[1]
    w = np.exp(1j * phases)
    y = h @ w
    value = float(np.sum(np.abs(y) ** 2))
    for _ in range(GA_MAX_SWEEPS):
        for j in range(1, M):
            c = y - w[j] * h[:, j]
            z = np.sum(np.conj(c) * h[:, j])
            if z != 0:
                phases[j] = -np.angle(z)
                w[j] = np.exp(1j * phases[j])
            y = c + w[j] * h[:, j]
        new = float(np.sum(np.abs(y) ** 2))
        if new - value <= GA_REL_TOL * max(new, np.finfo(float).tiny):
            value = max(new, value)
            break
        value = new
    return phases, value


def _aligned_start(h):
    """Phases that co-phase the strongest source across the array."""
    i = int(np.argmax(np.sum(np.abs(h) ** 2, axis=1)))
    return np.angle(h[i, 0]) - np.angle(h[i])


def run_genie(H, params: SimParams, resolution: int | None = None, lossy: bool = False,
              rng: np.random.Generator | None = None) -> SchemeResult:
    """Cost-free optimum configuration with perfect channel knowledge.

    ``resolution=None`` optimizes continuous phases, otherwise the search is
    over the ``2**resolution`` grid: exhaustive up to 1e6 configurations,
    cyclic coordinate ascent with restarts beyond. Branches are lossless
    unless ``lossy`` is set (finite resolution only).
    """
    h = _entries(H)
    M = h.shape[1]
    rng = np.random.default_rng(0) if rng is None else rng
    if resolution is None:
        if lossy:
            raise ValueError("lossy genie needs a finite resolution")
        name, delta = "GA_inf", np.ones(M)
    else:
        name = "GA_B"
        delta = insertion_loss_vector(M, resolution, params.delta0, ideal=not lossy).delta

    if M == 1 or h.shape[0] == 0:
        phases = np.zeros(M)
    elif resolution is None:
        starts = [_aligned_start(h)]
        cheap_grid = uniform_grid(params.B)
        if cheap_grid.size ** (M - 1) <= 4096:
            starts.append(_grid_exhaustive(h, cheap_grid, delta, params.eta))
        while len(starts) < GA_RESTARTS:
            starts.append(rng.uniform(0, 2 * np.pi, M))
        phases, _ = max((_continuous_ascent(h, s) for s in starts), key=lambda r: r[1])
        phases = phases - phases[0]
    else:
        grid = uniform_grid(resolution)
        if grid.size ** (M - 1) <= GA_EXHAUSTIVE_LIMIT:
            phases = _grid_exhaustive(h, grid, delta, params.eta)
        else:
            runs = [_grid_ascent(h, grid, delta, params.eta, rng.integers(0, grid.size, M - 1))
                    for _ in range(GA_RESTARTS)]
            phases, _ = max(runs, key=lambda r: r[1])

    config = _config(phases, resolution)
    P = harvested_power(h, config, LossProfile(delta), params.eta)
    return exploration_ledger([], P, 0, params, 0.0, name, resolution, config)


SCHEMES = ("GA_inf", "GA_B", "ST", "CB", "BF", "RC")


def run_scheme(name: str, H, params: SimParams) -> SchemeResult:
    if name == "BF":
        return run_brute_force(H, params)
    if name == "ST":
        return run_sequential(H, params)
    if name == "CB":
        return run_codebook(H, params)
    if name == "RC":
        return run_rigid(H, params)
    if name == "GA_inf":
        return run_genie(H, params)
    if name == "GA_B":
        return run_genie(H, params, resolution=params.B)
    raise ValueError(f"unknown scheme {name!r}; expected one of {', '.join(SCHEMES)}")
