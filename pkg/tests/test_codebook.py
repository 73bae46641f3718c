import itertools
import math

import numpy as np
import pytest

from dynrf import binary_stage_decomposition, bits_for, dft_codebook, uniform_grid


def test_uniform_grid():
    np.testing.assert_allclose(uniform_grid(1), [0, np.pi])
    np.testing.assert_allclose(uniform_grid(2), [0, np.pi / 2, np.pi, 3 * np.pi / 2])
    for B in range(1, 7):
        g = uniform_grid(B)
        assert g.size == 2**B
        assert np.all(np.diff(g) > 0) and g[-1] < 2 * np.pi
    with pytest.raises(ValueError):
        uniform_grid(0)


@pytest.mark.parametrize("B", range(1, 6))
def test_grid_nesting(B):
    coarse, fine = uniform_grid(B), uniform_grid(B + 1)
    assert all(np.isclose(fine, c, rtol=0, atol=1e-12).any() for c in coarse)


def test_bits_for():
    assert [bits_for(M) for M in range(1, 10)] == [0, 1, 2, 2, 3, 3, 3, 3, 4]


def test_dft_codebook_small():
    cb = dft_codebook(2)
    np.testing.assert_allclose(cb[0].phases, [0, 0])
    np.testing.assert_allclose(cb[1].phases, [0, np.pi])


@pytest.mark.parametrize("M", range(1, 17))
def test_dft_codebook_structure(M):
    cb = dft_codebook(M)
    assert len(cb) == M
    np.testing.assert_array_equal(cb[0].phases, np.zeros(M))
    allowed = 2 * np.pi * np.arange(M) / M
    for cw in cb:
        assert cw.phases[0] == 0.0
        assert all(np.isclose(allowed, p, rtol=0, atol=1e-12).any() for p in cw.phases)


def test_dft_phase_set_for_four_antennas():
    used = np.unique(np.concatenate([cw.phases for cw in dft_codebook(4)]))
    np.testing.assert_allclose(used, [0, np.pi / 2, np.pi, 3 * np.pi / 2])


@pytest.mark.parametrize("M", range(2, 17))
def test_dft_codewords_orthogonal(M):
    cb = dft_codebook(M)
    for a, b in itertools.combinations(cb, 2):
        assert abs(np.sum(np.exp(1j * (a.phases - b.phases)))) < 1e-9


def subset_sums(dec):
    return sorted({round(math.fmod(sum(s[b] for s, b in zip(dec.stages, bits)), 2 * math.pi), 9) % round(2 * math.pi, 9)
                   for bits in itertools.product((0, 1), repeat=dec.B)})


def test_stage_decomposition_examples():
    d4 = binary_stage_decomposition(4)
    assert d4.B == 2
    np.testing.assert_allclose(d4.stages, [(0, np.pi / 2), (0, np.pi)])
    np.testing.assert_allclose(subset_sums(d4), [0, np.pi / 2, np.pi, 3 * np.pi / 2], atol=1e-9)
    d2 = binary_stage_decomposition(2)
    assert d2.B == 1
    np.testing.assert_allclose(d2.stages, [(0, np.pi)])
    assert binary_stage_decomposition(5).B == 3
    with pytest.raises(ValueError):
        binary_stage_decomposition(1)


@pytest.mark.parametrize("M", [2, 4, 8, 16])
def test_stage_sums_cover_dft_phases(M):
    dec = binary_stage_decomposition(M)
    reach = dec.reachable()
    np.testing.assert_allclose(reach, uniform_grid(dec.B), atol=1e-9)
    for cw in dft_codebook(M):
        for p in cw.phases:
            assert np.isclose(reach, p, rtol=0, atol=1e-9).any()


@pytest.mark.parametrize("M", [3, 5, 6, 7, 9])
def test_stage_sums_uniform_grid_otherwise(M):
    dec = binary_stage_decomposition(M)
    np.testing.assert_allclose(dec.reachable(), uniform_grid(bits_for(M)), atol=1e-9)
