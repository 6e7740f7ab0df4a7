"""Exit criteria, one test per criterion.

A summary line per criterion is printed at the end of the pytest run.
"""
import math
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_RESULTS
from energyops.cli import main
from energyops.deo import (
    OperatorKind,
    alternative_deo,
    aprime_deo,
    backward_deo,
    ordinary_deo,
    symmetric_deo,
    tkeo,
)
from energyops.operators import apply_operator
from energyops.oracle import cosine_response, dtft_magnitude, operator_energy, spectral_energy, zero_pad
from energyops.pdeo import backward_pdeo, ordinary_pdeo, symmetric_pdeo
from energyops.sequence import OperatorOutput

SEED = 2024
COUNTER = np.array([0.5, 0.0, -0.5])  # (delta[n+1] - delta[n-1]) / 2


def report(number, title, passed, detail):
    ACCEPTANCE_RESULTS.append(f"criterion {number} [{'PASS' if passed else 'FAIL'}] {title}: {detail}")
    print(ACCEPTANCE_RESULTS[-1])


def gap(a, b):
    s, e = max(a.start, b.start), min(a.stop, b.stop)
    va, vb = a.values[..., s:e], b.values[..., s:e]
    return float(np.max(np.abs(va - vb))) / max(1.0, float(np.max(np.abs(va))))


def test_criterion_1_counterexample_energy():
    value = operator_energy(OperatorKind.ORDINARY, COUNTER, 4)
    best = math.inf
    for _ in range(20):
        t = time.perf_counter()
        operator_energy(OperatorKind.ORDINARY, COUNTER, 4)
        best = min(best, time.perf_counter() - t)
    ok = abs(value + 0.25) <= 1e-12 and best < 1e-3
    report(1, "energy-sign counterexample", ok, f"E={value!r}, runtime={best * 1e3:.3f} ms")
    assert abs(value + 0.25) <= 1e-12
    assert best < 1e-3


def test_criterion_2_cosine_oracles():
    rng = np.random.default_rng(SEED)
    omegas = np.linspace(0.05, math.pi - 0.05, 52)[1:-1]
    n = np.arange(96)
    t0 = time.perf_counter()
    worst = 0.0
    for kind in OperatorKind:
        if kind is OperatorKind.ORDINARY:
            ks = range(-8, 9)
        else:
            ks = range(1, 11 if kind.is_pdeo else 9)
        for A in (0.5, 1.0, 2.0):
            theta = rng.uniform(0, 2 * math.pi, size=(omegas.size, 1))
            x = A * np.cos(omegas[:, None] * n + theta)
            for k in ks:
                out = apply_operator(kind, x, k)
                want = cosine_response(kind, k, A, omegas)[:, None]
                worst = max(worst, float(np.max(np.abs(out.valid - want))) / A ** 2)
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-9 and elapsed < 5
    report(2, "cosine-oracle agreement", ok, f"max error={worst:.2e} (tol 1e-9), runtime={elapsed:.2f} s")
    assert worst <= 1e-9
    assert elapsed < 5


def _identity_pairs():
    def reflect(x, k):
        return -(ordinary_deo(x, 2 - k).shift(k - 1))

    def lag_expansion(x, k):
        m = k
        psi = tkeo(x)
        return psi + psi.shift(-m) - ordinary_deo(x, 2 - m) - ordinary_deo(x, m + 2).shift(-m)

    def lag_direct(x, k):
        xo = OperatorOutput.from_signal(x)
        return tkeo(xo - xo.shift(-k))

    return [
        ("backward expansion", backward_deo, lambda x, k: backward_deo(x, k, method="expansion"), range(1, 9)),
        ("negative-order reflection", ordinary_deo, reflect, range(-8, 0)),
        ("symmetric expansion", symmetric_deo, lambda x, k: symmetric_deo(x, k, method="expansion"), range(1, 9)),
        ("alternative recursion", alternative_deo, lambda x, k: alternative_deo(x, k, method="recursion"), range(1, 9)),
        ("a' closed form vs recursion", aprime_deo, lambda x, k: aprime_deo(x, k, method="recursion"), range(1, 9)),
        ("lag-difference TKEO", lag_direct, lag_expansion, range(1, 9)),
        ("ordinary PDEO branches", ordinary_pdeo, lambda x, k: ordinary_pdeo(x, k, method="direct"), range(1, 9)),
        ("symmetric PDEO double sum", symmetric_pdeo, lambda x, k: symmetric_pdeo(x, k, method="expansion"), range(1, 9)),
        ("backward PDEO double sum", backward_pdeo, lambda x, k: backward_pdeo(x, k, method="expansion"), range(1, 9)),
    ]


def test_criterion_3_identities():
    x = np.random.default_rng(SEED).uniform(-1, 1, size=(100, 256))
    t0 = time.perf_counter()
    worst = {name: max(gap(lhs(x, k), rhs(x, k)) for k in ks) for name, lhs, rhs, ks in _identity_pairs()}
    elapsed = time.perf_counter() - t0
    bad = [n for n, v in worst.items() if v > 1e-10]
    ok = not bad and elapsed < 10
    report(3, "identity suite", ok,
           f"{len(worst) - len(bad)}/{len(worst)} identities, max rel error={max(worst.values()):.2e} "
           f"(tol 1e-10), runtime={elapsed:.2f} s" + (f", failing: {bad}" if bad else ""))
    assert not bad
    assert elapsed < 10


def _random_supports(rng, count, max_len):
    x = rng.uniform(-1, 1, size=(count, max_len))
    lengths = rng.integers(1, max_len + 1, size=count)
    x[np.arange(max_len)[None, :] >= lengths[:, None]] = 0.0
    return x


def test_criterion_4_parseval():
    kinds = [OperatorKind.ORDINARY, OperatorKind.SYMMETRIC, OperatorKind.BACKWARD,
             OperatorKind.PDEO_ORDINARY, OperatorKind.PDEO_BACKWARD, OperatorKind.PDEO_SYMMETRIC]
    signals = _random_supports(np.random.default_rng(SEED), 200, 64)
    t0 = time.perf_counter()
    worst = 0.0
    for x in signals:
        mag = dtft_magnitude(x, 2 ** 16)
        for kind in kinds:
            for k in (2, 4, 6):
                direct = operator_energy(kind, x, k)
                spec = spectral_energy(x, kind, k, 2 ** 16, magnitude=mag)
                worst = max(worst, abs(direct - spec) / (1 + abs(direct)))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-6 and elapsed < 60
    report(4, "spectral total-energy identity", ok, f"max rel error={worst:.2e} (tol 1e-6), runtime={elapsed:.1f} s")
    assert worst <= 1e-6
    assert elapsed < 60


def test_criterion_5_positivity():
    signals = _random_supports(np.random.default_rng(SEED + 1), 1000, 128)
    t0 = time.perf_counter()
    lowest = math.inf
    for kind in (OperatorKind.PDEO_ORDINARY, OperatorKind.PDEO_BACKWARD, OperatorKind.PDEO_SYMMETRIC):
        for k in range(1, 11):
            out = apply_operator(kind, zero_pad(signals, 2 * k + 4), k)
            lowest = min(lowest, float(np.min(np.sum(out.valid, axis=-1))))
    # negative k=4 energy witnesses for the DEO kinds
    witnesses = {kind: operator_energy(kind, COUNTER, 4)
                 for kind in (OperatorKind.ORDINARY, OperatorKind.SYMMETRIC,
                              OperatorKind.ALTERNATIVE, OperatorKind.APRIME)}
    n = np.arange(64)
    witnesses[OperatorKind.BACKWARD] = operator_energy(
        OperatorKind.BACKWARD, np.hanning(64) * np.cos(0.3 * math.pi * n), 4)
    elapsed = time.perf_counter() - t0
    negative = all(v < 0 for v in witnesses.values())
    ok = lowest >= -1e-9 and negative and elapsed < 30
    report(5, "PDEO positivity", ok,
           f"min PDEO energy={lowest:.3e} (tol -1e-9), DEO k=4 witnesses "
           + ", ".join(f"{k.value}={v:.4g}" for k, v in witnesses.items()) + f", runtime={elapsed:.1f} s")
    assert lowest >= -1e-9
    assert negative
    assert elapsed < 30


@pytest.fixture(scope="module")
def default_sweeps(tmp_path_factory):
    base = tmp_path_factory.mktemp("sweep")
    t0 = time.perf_counter()
    assert main(["--jobs", "1", "sweep", "--out", str(base / "a")]) == 0
    elapsed = time.perf_counter() - t0
    assert main(["--jobs", "4", "sweep", "--out", str(base / "b")]) == 0
    return base / "a", base / "b", elapsed


def _load(path):
    rows = {}
    for line in (path / "sweep.csv").read_text().splitlines()[1:]:
        kind, k, mod, beta, db = line.split(",")
        rows[kind, int(k), mod, float(beta)] = float(db)
    return rows


def test_criterion_6_benchmark_trend(default_sweeps):
    a, _, elapsed = default_sweeps
    rows = _load(a)
    failures, checked = [], 0
    for mod in ("AM", "FM"):
        for k in (4, 6, 8):
            for deo in ("symmetric", "ordinary", "backward"):
                pd, de = rows["pdeo-" + deo, k, mod, 1.0], rows[deo, k, mod, 1.0]
                checked += 1
                if not pd > de:
                    failures.append(f"{mod} k={k} {deo}: PDEO {pd:.2f} dB <= DEO {de:.2f} dB")
    plots = sorted(p.name for p in a.glob("*.svg"))
    ok = not failures and elapsed < 60 and len(plots) == 6
    report(6, "benchmark trend at beta=1", ok,
           f"{checked - len(failures)}/{checked} PDEO>DEO comparisons hold, {len(plots)} plots, "
           f"sweep runtime={elapsed:.1f} s" + (f"; failing: {'; '.join(failures)}" if failures else ""))
    assert len(plots) == 6
    assert elapsed < 60
    assert not failures, failures


def test_criterion_7_beta_zero_exact(default_sweeps):
    rows = _load(default_sweeps[0])
    zero = [v for (kind, k, mod, beta), v in rows.items() if beta == 0.0]
    ok = len(zero) == 8 * 3 * 2 and all(v == math.inf for v in zero)
    report(7, "beta=0 rows are infinite", ok, f"{sum(v == math.inf for v in zero)}/{len(zero)} rows inf")
    assert ok


def test_criterion_8_determinism(default_sweeps):
    a, b, _ = default_sweeps
    same = (a / "sweep.csv").read_bytes() == (b / "sweep.csv").read_bytes()
    report(8, "sweep determinism across --jobs", same, "jobs=1 vs jobs=4 sweep.csv byte-identical" if same else "differ")
    assert same
