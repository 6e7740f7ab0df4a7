"""AM and FM test signals with analytic amplitude and frequency tracks."""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import TextIO

import numpy as np

from .errors import InvalidParameter


@dataclass(frozen=True)
class ModulationParams:
    lam: float
    beta: float
    omega_c: float
    theta: float = 0.0
    theta_q: float = 0.0
    amplitude: float = 1.0
    n: int = 1024


@dataclass(frozen=True)
class ModulatedSignal:
    samples: np.ndarray
    amp_track: np.ndarray
    freq_track: np.ndarray
    phase: np.ndarray
    kind: str  # "am" or "fm"
    params: ModulationParams

    def __len__(self) -> int:
        return len(self.samples)


def _validate(p: ModulationParams) -> None:
    if not 0.0 <= p.beta <= 1.0:
        raise InvalidParameter(f"beta={p.beta} outside [0, 1]")
    if not 0.0 < p.omega_c < math.pi:
        raise InvalidParameter(f"carrier omega_c={p.omega_c} outside (0, pi)")
    if not 0.0 <= p.lam <= 0.5:
        raise InvalidParameter(f"lambda={p.lam} outside [0, 0.5]")
    if p.amplitude <= 0:
        raise InvalidParameter(f"amplitude A={p.amplitude} must be positive")
    if p.n < 1:
        raise InvalidParameter(f"length N={p.n} must be positive")


def message(p: ModulationParams) -> np.ndarray:
    """Normalised message ``q[n] = cos(lambda * omega_c * n + theta_q)``."""
    n = np.arange(p.n)
    return np.cos(p.lam * p.omega_c * n + p.theta_q)


def make_fm(lam: float, beta: float, omega_c: float, theta: float = 0.0,
            theta_q: float = 0.0, A: float = 1.0, N: int = 1024) -> ModulatedSignal:
    """FM signal ``A cos(theta + sum_{m<=n} omega_c (1 + beta q[m]))``.

    The instantaneous frequency may reach but not exceed pi.

    Raises:
        InvalidParameter: on any parameter invariant breach, including
            ``omega_c * (1 + beta) > pi``.
    """
    p = ModulationParams(lam, beta, omega_c, theta, theta_q, A, N)
    _validate(p)
    if omega_c * (1.0 + beta) > math.pi:
        raise InvalidParameter(
            f"instantaneous frequency omega_c*(1+beta)={omega_c * (1 + beta)!r} exceeds pi")
    freq = omega_c * (1.0 + beta * message(p))
    phase = theta + np.cumsum(freq)
    return ModulatedSignal(A * np.cos(phase), np.full(N, float(A)), freq, phase, "fm", p)


def make_am(lam: float, beta: float, omega_c: float, theta: float = 0.0,
            theta_q: float = 0.0, A: float = 1.0, N: int = 1024) -> ModulatedSignal:
    """AM signal ``A (1 + beta q[n]) cos(omega_c n + theta)``."""
    p = ModulationParams(lam, beta, omega_c, theta, theta_q, A, N)
    _validate(p)
    amp = A * (1.0 + beta * message(p))
    phase = omega_c * np.arange(N) + theta
    return ModulatedSignal(amp * np.cos(phase), amp, np.full(N, float(omega_c)), phase, "am", p)


def make_signal(modulation: str, *args, **kwargs) -> ModulatedSignal:
    modulation = modulation.lower()
    if modulation == "am":
        return make_am(*args, **kwargs)
    if modulation == "fm":
        return make_fm(*args, **kwargs)
    raise ValueError(f"unknown modulation {modulation!r} (expected am or fm)")


def write_csv(sig: ModulatedSignal, fh: TextIO) -> None:
    """Write ``n,sample,amp_track,freq_track`` rows with round-trip floats."""
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["n", "sample", "amp_track", "freq_track"])
    for i in range(len(sig)):
        w.writerow([i, repr(float(sig.samples[i])), repr(float(sig.amp_track[i])),
                    repr(float(sig.freq_track[i]))])
