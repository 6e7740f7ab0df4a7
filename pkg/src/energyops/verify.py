"""Seeded verification suites: algebraic identities, cosine oracles, energy sign.

Each suite returns a list of :class:`Check` results; the CLI ``verify``
command prints them and exits non-zero if any fails.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .deo import (
    OperatorKind,
    alternative_deo,
    aprime_deo,
    backward_deo,
    ordinary_deo,
    symmetric_deo,
    tkeo,
)
from .operators import apply_operator
from .oracle import cosine_response, dtft_magnitude, operator_energy, spectral_energy, total_energy, zero_pad
from .pdeo import backward_pdeo, ordinary_pdeo, symmetric_pdeo
from .sequence import OperatorOutput, intersect

DEFAULT_SEED = 0
IDENTITY_RTOL = 1e-10
COSINE_ATOL = 1e-9
PARSEVAL_RTOL = 1e-6
POSITIVITY_ATOL = 1e-9

KINDS = tuple(OperatorKind)
DEO_KINDS = tuple(k for k in KINDS if not k.is_pdeo)
PDEO_KINDS = tuple(k for k in KINDS if k.is_pdeo)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    max_error: float
    tolerance: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: max_error={self.max_error:.3e} tol={self.tolerance:.1e}"


def orders(kind: OperatorKind, kmax_deo: int = 8, kmax_pdeo: int = 10) -> range:
    """Orders exercised by the suites for ``kind``."""
    if kind is OperatorKind.ORDINARY:
        return range(-kmax_deo, kmax_deo + 1)
    return range(1, (kmax_pdeo if kind.is_pdeo else kmax_deo) + 1)


def relative_gap(a: OperatorOutput, b: OperatorOutput) -> float:
    """Max difference on the common range, relative to the larger magnitude (at least 1)."""
    start, stop = intersect(a, b)
    if stop <= start:
        raise ValueError("no common valid range")
    va = a.values[..., start:stop]
    vb = b.values[..., start:stop]
    scale = max(1.0, float(np.max(np.abs(va))), float(np.max(np.abs(vb))))
    return float(np.max(np.abs(va - vb))) / scale


def _pairs() -> dict[str, tuple[Callable, Callable, range]]:
    def reflect(x, k):
        # Y_k(x_n) = -Y_{2-k}(x_{n+k-1})
        return -(OperatorOutput.from_signal(ordinary_deo(x, 2 - k)).shift(k - 1))

    return {
        "backward DEO = ordinary-DEO expansion": (
            backward_deo, lambda x, k: backward_deo(x, k, method="expansion"), range(1, 9)),
        "ordinary DEO negative-order reflection": (ordinary_deo, reflect, range(-8, 0)),
        "symmetric DEO = ordinary-DEO expansion": (
            symmetric_deo, lambda x, k: symmetric_deo(x, k, method="expansion"), range(1, 9)),
        "alternative DEO = recursion": (
            alternative_deo, lambda x, k: alternative_deo(x, k, method="recursion"), range(1, 9)),
        "a' DEO closed form = recursion": (
            aprime_deo, lambda x, k: aprime_deo(x, k, method="recursion"), range(1, 9)),
        "ordinary PDEO = TKEO of x[n] - x[n-m]": (
            ordinary_pdeo, lambda x, k: ordinary_pdeo(x, k, method="direct"), range(1, 9)),
        "symmetric PDEO = ordinary-DEO double sum": (
            symmetric_pdeo, lambda x, k: symmetric_pdeo(x, k, method="expansion"), range(1, 9)),
        "backward PDEO = ordinary-DEO double sum": (
            backward_pdeo, lambda x, k: backward_pdeo(x, k, method="expansion"), range(1, 9)),
    }


def difference_tkeo_identity(x: np.ndarray, m: int) -> OperatorOutput:
    """Right side of ``Psi(x_n - x_{n-m}) = Psi(x_n) + Psi(x_{n-m}) - Y_{2-m}(x_n) - Y_{m+2}(x_{n-m})``."""
    psi = tkeo(x)
    return psi + psi.shift(-m) - ordinary_deo(x, 2 - m) - ordinary_deo(x, m + 2).shift(-m)


def identity_suite(seed: int = DEFAULT_SEED, count: int = 100, length: int = 256) -> list[Check]:
    rng = np.random.default_rng(seed)
    x = rng.uniform(-1.0, 1.0, size=(count, length))
    checks = []
    for name, (lhs, rhs, ks) in _pairs().items():
        worst = max(relative_gap(lhs(x, k), rhs(x, k)) for k in ks)
        checks.append(Check(name, worst <= IDENTITY_RTOL, worst, IDENTITY_RTOL))
    worst = 0.0
    for m in range(1, 7):
        xo = OperatorOutput.from_signal(x)
        direct = tkeo(xo - xo.shift(-m))
        worst = max(worst, relative_gap(direct, difference_tkeo_identity(x, m)))
    checks.append(Check("TKEO of ordinary difference expansion", worst <= IDENTITY_RTOL, worst, IDENTITY_RTOL))
    return checks


def cosine_suite(seed: int = DEFAULT_SEED, length: int = 96) -> list[Check]:
    rng = np.random.default_rng(seed)
    omegas = np.linspace(0.05, math.pi - 0.05, 50)
    n = np.arange(length)
    checks = []
    for kind in KINDS:
        worst = 0.0
        for A in (0.5, 1.0, 2.0):
            theta = rng.uniform(0, 2 * math.pi, size=omegas.size)
            x = A * np.cos(omegas[:, None] * n + theta[:, None])
            for k in orders(kind):
                out = apply_operator(kind, x, k)
                want = cosine_response(kind, k, A, omegas)
                err = np.max(np.abs(out.valid - want[:, None])) / (A * A)
                worst = max(worst, float(err))
        checks.append(Check(f"cosine response {kind.value}", worst <= COSINE_ATOL, worst, COSINE_ATOL))
    return checks


COUNTEREXAMPLE = np.array([0.5, 0.0, -0.5])  # (delta[n+1] - delta[n-1]) / 2


def negative_witness(kind: OperatorKind) -> np.ndarray:
    """Finite-support signal whose order-4 total energy is negative under ``kind``."""
    if kind is OperatorKind.BACKWARD:
        n = np.arange(64)
        return np.hanning(64) * np.cos(0.3 * math.pi * n)
    return COUNTEREXAMPLE


def random_supports(rng: np.random.Generator, count: int, max_length: int) -> np.ndarray:
    """``count`` signals of random length ``<= max_length``, zero-filled to ``max_length``."""
    x = rng.uniform(-1.0, 1.0, size=(count, max_length))
    lengths = rng.integers(1, max_length + 1, size=count)
    x[np.arange(max_length)[None, :] >= lengths[:, None]] = 0.0
    return x


def energy_suite(seed: int = DEFAULT_SEED, parseval_count: int = 200, positivity_count: int = 1000,
                 grid: int = 2 ** 16) -> list[Check]:
    checks = []
    e = operator_energy(OperatorKind.ORDINARY, COUNTEREXAMPLE, 4)
    err = abs(e + 0.25)
    checks.append(Check("ordinary DEO k=4 counterexample energy = -1/4", err <= 1e-12, err, 1e-12))
    es = spectral_energy(COUNTEREXAMPLE, OperatorKind.ORDINARY, 4, grid)
    err = abs(es + 0.25)
    checks.append(Check("spectral energy of counterexample = -1/4", err <= 1e-9, err, 1e-9))

    for kind in DEO_KINDS:
        e = operator_energy(kind, negative_witness(kind), 4)
        checks.append(Check(f"negative k=4 energy witness {kind.value}", e < 0, max(0.0, e), 0.0))

    rng = np.random.default_rng(seed)
    supports = random_supports(rng, parseval_count, 64)
    worst = 0.0
    for x in supports:
        mag = dtft_magnitude(x, grid)
        for kind in KINDS:
            for k in (2, 4, 6):
                direct = operator_energy(kind, x, k)
                spec = spectral_energy(x, kind, k, grid, magnitude=mag)
                worst = max(worst, abs(direct - spec) / (1.0 + abs(direct)))
    checks.append(Check("sum = spectral integral (all kinds, k=2,4,6)", worst <= PARSEVAL_RTOL, worst, PARSEVAL_RTOL))

    supports = random_supports(rng, positivity_count, 128)
    for kind in PDEO_KINDS:
        lowest = math.inf
        for k in range(1, 11):
            out = apply_operator(kind, zero_pad(supports, 2 * k + 4), k)
            lowest = min(lowest, float(np.min(np.sum(out.valid, axis=-1))))
        checks.append(Check(f"non-negative total energy {kind.value}", lowest >= -POSITIVITY_ATOL,
                            max(0.0, -lowest), POSITIVITY_ATOL))
    return checks


SUITES = {"identities": identity_suite, "cosine": cosine_suite, "energy": energy_suite}
