import math
from dataclasses import replace

import numpy as np
import pytest

from energyops.aser import (
    SweepConfig,
    aser,
    approximation_error,
    desired_output,
    grid,
    reference_cell,
    run_sweep,
    to_db,
)
from energyops.deo import OperatorKind
from energyops.errors import EmptyRange, InvalidParameter, OrderOutOfRange
from energyops.signals import ModulatedSignal, ModulationParams, make_am, make_fm

WC = math.pi / 2


def test_grid_counts():
    assert len(grid(0, 0.02, 0.5)) == 26
    assert len(grid(0, 0.01, 1)) == 101
    assert grid(0, 0.01, 1)[37] == 0.37


def test_desired_output_unmodulated_is_constant():
    s = make_fm(0.3, 0.0, WC, N=64)
    for kind in OperatorKind:
        d = desired_output(kind, 4, s)
        np.testing.assert_allclose(d, desired_output(kind, 4, s)[0])


def test_desired_output_backward_k4_am():
    s = make_am(0.2, 0.5, WC, N=64)
    d = desired_output("backward", 4, s)
    # 2^4 (-1)^3 A^2 sin^4(W/2) (cos W + cos 2W) / 2 at W = pi/2
    want = -16 * s.amp_track ** 2 * 0.25 * (0 - 1) / 2
    np.testing.assert_allclose(d, want, atol=1e-12)


def test_desired_output_symmetric_pdeo_k6_fm():
    s = make_fm(0.2, 0.5, 1.0, A=1.3, N=64)
    np.testing.assert_allclose(desired_output("pdeo-symmetric", 6, s), 1.69 * np.sin(s.freq_track) ** 6, atol=1e-14)


def test_error_vanishes_without_modulation():
    s = make_am(0.2, 0.0, 1.1, N=256)
    for kind in OperatorKind:
        d, e = approximation_error(kind, 6, s)
        assert np.max(np.abs(e)) <= 1e-9
        assert len(d) == len(e)


def test_error_grows_with_beta():
    sizes = []
    for beta in (0.1, 0.2, 0.4):
        _, e = approximation_error("ordinary", 4, make_fm(0.1, beta, WC, N=1024))
        sizes.append(np.mean(np.abs(e)))
    assert sizes[0] > 0 and sizes[0] < sizes[1] < sizes[2]


def test_error_of_zero_signal_is_zero():
    z = np.zeros(128)
    s = ModulatedSignal(z, z, np.full(128, WC), np.zeros(128), "am", ModulationParams(0.1, 0.0, WC, n=128))
    for kind in OperatorKind:
        _, e = approximation_error(kind, 4, s)
        assert np.all(e == 0)


def test_guard_band_trims_window():
    s = make_am(0.1, 0.3, WC, N=100)
    d, _ = approximation_error("ordinary", 4, s)
    # valid range [1, 97) shrunk by 6 each side
    assert len(d) == 96 - 12


def test_aser_examples(rng):
    assert aser(np.full(10, -2.0), np.full(10, 1.0)) == 2.0
    assert math.isinf(aser(np.ones(5), np.zeros(5)))
    D, E = rng.normal(size=100), rng.normal(size=100)
    assert aser(D, E) == pytest.approx(sum(abs(v) for v in D) / sum(abs(v) for v in E), rel=1e-13)
    with pytest.raises(EmptyRange):
        aser([], [])


def test_to_db():
    assert to_db(10.0) == pytest.approx(20.0)
    assert to_db(math.inf) == math.inf


def test_singleton_grid_rows_are_infinite():
    cfg = SweepConfig(lambdas=(0.0,), betas=(0.0,), n=256)
    res = run_sweep(cfg, jobs=1)
    assert len(res.rows) == 8 * 3 * 2
    assert all(math.isinf(r.aser_db) and r.aser_db > 0 for r in res.rows)


SMALL = SweepConfig(lambdas=(0.1, 0.2, 0.3), betas=(0.0, 0.5, 1.0), n=256)


def test_batched_sweep_equals_scalar_reference():
    res = run_sweep(SMALL, jobs=2)
    for r in res.rows:
        ref = reference_cell(SMALL, r.kind, r.k, r.modulation, r.beta)
        assert r.aser_db == ref or (math.isinf(ref) and math.isinf(r.aser_db))


def test_sweep_independent_of_jobs():
    a = run_sweep(SMALL, jobs=1).to_csv()
    b = run_sweep(SMALL, jobs=5).to_csv()
    assert a == b


def test_beta_zero_rows_infinite():
    res = run_sweep(SMALL, jobs=1)
    assert all(math.isinf(r.aser_db) for r in res.rows if r.beta == 0.0)
    assert all(math.isfinite(r.aser_db) for r in res.rows if r.beta > 0.0)


def test_aser_invariant_to_amplitude():
    a = run_sweep(SMALL, jobs=1)
    b = run_sweep(replace(SMALL, amplitude=3.0), jobs=1)
    for ra, rb in zip(a.rows, b.rows):
        if math.isfinite(ra.aser_db):
            ratio_a, ratio_b = 10 ** (ra.aser_db / 20), 10 ** (rb.aser_db / 20)
            assert ratio_b == pytest.approx(ratio_a, rel=1e-9)


def test_csv_format():
    res = run_sweep(replace(SMALL, kinds=(OperatorKind.SYMMETRIC,), orders=(4,), modulations=("AM",)), jobs=1)
    lines = res.to_csv().splitlines()
    assert lines[0] == "kind,k,modulation,beta,aser_db"
    assert lines[1] == "symmetric,4,AM,0.0,inf"
    assert len(lines) == 4


@pytest.mark.parametrize("change,error", [
    (dict(betas=()), InvalidParameter),
    (dict(lambdas=(0.2, 0.1)), InvalidParameter),
    (dict(n=40), InvalidParameter),
    (dict(modulations=("PM",)), InvalidParameter),
    (dict(orders=(0,)), OrderOutOfRange),
])
def test_config_validation(change, error):
    with pytest.raises(error):
        run_sweep(replace(SMALL, **change))
