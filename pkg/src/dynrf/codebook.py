"""Quantized phase sets, DFT codebooks and switched-stage decompositions."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .combiner import TWO_PI, PhaseConfig


def uniform_grid(B: int) -> np.ndarray:
    """The ``2**B`` phases ``2 pi n / 2**B`` realizable by a B-bit shifter."""
    if B < 1:
        raise ValueError(f"B must be >= 1, got {B}")
    return TWO_PI * np.arange(2**B) / 2**B


def bits_for(M: int) -> int:
    """Shifter resolution ``ceil(log2 M)`` needed by an M-codeword DFT codebook."""
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    return (M - 1).bit_length()


def dft_phases(M: int) -> np.ndarray:
    """(M, M) array; row ``m`` holds ``2 pi j m / M mod 2 pi`` for antenna ``j``."""
    jm = np.outer(np.arange(M), np.arange(M)) % M  # exact integer reduction
    return TWO_PI * jm.T / M


def dft_codebook(M: int) -> list[PhaseConfig]:
    """The M DFT beams; codeword ``m`` points at ``sin(alpha) = 2m/M (mod 2)``."""
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    bits = bits_for(M) or None
    return [PhaseConfig(row, bits=bits) for row in dft_phases(M)]


@dataclass(frozen=True)
class StageDecomposition:
    """B switched stages; stage ``k`` contributes ``stages[k][bit]``."""

    stages: tuple[tuple[float, float], ...]

    @property
    def B(self) -> int:
        return len(self.stages)

    def phase(self, bits) -> float:
        return math.fmod(sum(stage[b] for stage, b in zip(self.stages, bits)), TWO_PI)

    def reachable(self) -> np.ndarray:
        """Sorted set of every stage-sum reduced mod 2 pi."""
        sums = np.array([self.phase(bits) for bits in itertools.product((0, 1), repeat=self.B)])
        sums = np.round(np.mod(sums, TWO_PI), 12)
        sums[sums == round(TWO_PI, 12)] = 0.0
        return np.unique(sums)


def binary_stage_decomposition(M: int) -> StageDecomposition:
    """Binary-weighted stages realizing the DFT phase set for M antennas.

    Uses ``B = ceil(log2 M)`` stages, stage ``k`` (1-based) switching between
    0 and ``2 pi 2**(k-1) / 2**B``. The subset sums form the uniform
    ``2**B`` grid, which contains ``(2 pi / M) {0..M-1}`` when M is a power of two.
    """
    if M < 2:
        raise ValueError(f"M must be >= 2, got {M}")
    B = bits_for(M)
    stages = tuple((0.0, TWO_PI * 2 ** (k - 1) / 2**B) for k in range(1, B + 1))
    return StageDecomposition(stages)
