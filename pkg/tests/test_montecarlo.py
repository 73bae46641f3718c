import itertools

import numpy as np
import pytest

from dynrf import SimParams, SweepSpec, crossover_density, derive_trial_seed, run_trial, sweep_antennas, sweep_density
from dynrf.montecarlo import AggregateRow, aggregate, select_resolution
from dynrf.schemes import SCHEMES, run_scheme

DYNAMIC = ("ST", "CB", "BF")


def test_trial_seed_is_fixed():
    assert derive_trial_seed(42, 3, 7) == derive_trial_seed(42, 3, 7)
    assert derive_trial_seed(42, 3, 7) != derive_trial_seed(42, 7, 3)


def test_trial_seeds_do_not_collide():
    seeds = {derive_trial_seed(2021, s, t) for s, t in itertools.product(range(256), range(256))}
    assert len(seeds) == 2**16


def test_empty_deployment_pure_cost(params):
    results = run_trial(params, 0.0, SCHEMES, derive_trial_seed(1, 0, 0))
    for r in results:
        assert r.E_abs == 0.0
        if r.scheme in DYNAMIC:
            assert r.E_net == -(r.E_phase + r.E_meter) < 0


def test_trial_is_deterministic(params):
    seed = derive_trial_seed(5, 1, 2)
    a = run_trial(params, 1e-3, SCHEMES, seed)
    b = run_trial(params, 1e-3, SCHEMES, seed)
    assert [(r.E_abs, r.E_net) for r in a] == [(r.E_abs, r.E_net) for r in b]


@pytest.mark.parametrize("density", [10**-2.8, 1e-2])
def test_genie_dominates_every_realization(density):
    params = SimParams()
    for t in range(150):
        results = {r.scheme: r for r in run_trial(params, density, SCHEMES, derive_trial_seed(9, 0, t))}
        ga = results["GA_inf"].E_abs
        for r in results.values():
            assert ga >= r.P_final * params.T * (1 - 1e-12)
        assert ga >= results["RC"].E_abs


def test_density_sweep_rows():
    spec = SweepSpec("density", (0.0, 1e-3), trials=5, master_seed=3)
    rows = sweep_density(spec)
    assert len(rows) == len(SCHEMES) * 2
    for r in rows[: len(SCHEMES)]:
        assert r.mean_E_abs == 0.0
    assert all(r.trials == 5 for r in rows)


def test_single_trial_has_no_ci():
    rows = sweep_density(SweepSpec("density", (1e-3,), trials=1))
    assert all(r.ci95_E_abs is None and r.ci95_E_net is None for r in rows)
    assert all(r.mean_E_abs is not None for r in rows)


def test_ci_formula(params):
    results = [run_scheme("RC", np.array([[np.sqrt(x)]]), params.with_(M=1)) for x in (1.0, 2.0, 4.0)]
    row = aggregate(results, "RC", 0.0, 1, 0.0)
    e = 0.5 * np.array([1.0, 2.0, 4.0])
    assert row.mean_E_abs == pytest.approx(e.mean())
    assert row.ci95_E_abs == pytest.approx(1.96 * e.std(ddof=1) / np.sqrt(3))


def test_workers_do_not_change_results():
    spec = SweepSpec("density", (1e-3, 1e-2), trials=12, master_seed=11)
    assert sweep_density(spec) == sweep_density(SweepSpec(**{**spec.__dict__, "workers": 2}))


def _row(B, net, infeasible=0):
    return AggregateRow("ST", 4, 4, B, 1e-3, 10, infeasible, 1.0, 0.1, net, 0.1)


def test_select_resolution():
    assert select_resolution([_row(1, 2.0), _row(2, 3.0), _row(3, 1.0)]).B_used == 2
    assert select_resolution([_row(2, 3.0), _row(1, 3.0)]).B_used == 1  # tie -> fewer bits
    assert select_resolution([_row(1, 5.0, infeasible=10), _row(2, 1.0)]).B_used == 2
    assert select_resolution([_row(1, 5.0, infeasible=10)]) is None


def test_antenna_sweep_marks_infeasible_brute_force():
    spec = SweepSpec("antennas", (8,), trials=3, schemes=("BF", "ST", "CB"), B_candidates=(2, 3))
    rows = {r.scheme: r for r in sweep_antennas(spec)}
    assert rows["BF"].infeasible_count == 3 and rows["BF"].mean_E_net is None and rows["BF"].B_used is None
    assert rows["CB"].B_used == 3
    assert rows["ST"].B_used in (2, 3)


def test_antenna_sweep_reuses_realizations():
    # M = 1 makes every scheme identical, also across the B candidates
    spec = SweepSpec("antennas", (1,), trials=4, schemes=("GA_inf", "ST", "CB", "BF", "RC"))
    rows = sweep_antennas(spec)
    assert len({r.mean_E_abs for r in rows}) == 1


def test_crossover_density():
    def rows(lam, rc, st):
        return [AggregateRow("RC", lam, 4, 0, lam, 1, 0, rc, None, rc, None),
                AggregateRow("ST", lam, 4, 2, lam, 1, 0, st, None, st, None)]

    data = rows(1e-4, 1.0, 0.0) + rows(1e-3, 1.0, 0.5) + rows(1e-2, 1.0, 2.0)
    assert crossover_density(data) == pytest.approx(10 ** (-3 + 0.5 / 1.5))
    assert crossover_density(rows(1e-4, 1.0, 0.0)) is None
