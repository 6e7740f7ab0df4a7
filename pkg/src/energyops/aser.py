"""Approximation error, ASER, and the lambda x beta benchmark sweep.

For an AM or FM test signal the desired output is the operator's cosine
response with the carrier amplitude and frequency replaced by the
instantaneous tracks; the approximation error is the operator output minus
that.  ASER is ``mean|D| / mean|E|``.  :func:`run_sweep` averages ASER over
the bandwidth ratio for every modulation depth and reports it in dB.
"""
from __future__ import annotations

import csv
import io
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .deo import OperatorKind, check_order
from .errors import EmptyRange, InvalidParameter, SignalTooShort
from .operators import apply_operator
from .oracle import cosine_response
from .signals import ModulatedSignal, make_signal

# Mean |E| at or below this fraction of the signal power counts as exact.
EXACT_RTOL = 1e-9

MODULATIONS = ("AM", "FM")


def grid(start: float, step: float, stop: float) -> tuple[float, ...]:
    """Inclusive arithmetic grid ``start:step:stop`` with clean decimal values."""
    if step <= 0:
        raise InvalidParameter(f"grid step must be positive, got {step}")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    if count < 1:
        raise InvalidParameter(f"empty grid {start}:{step}:{stop}")
    return tuple(round(start + i * step, 12) for i in range(count))


@dataclass(frozen=True)
class SweepConfig:
    omega_c: float = math.pi / 2
    lambdas: tuple[float, ...] = field(default_factory=lambda: grid(0.0, 0.02, 0.5))
    betas: tuple[float, ...] = field(default_factory=lambda: grid(0.0, 0.01, 1.0))
    orders: tuple[int, ...] = (4, 6, 8)
    kinds: tuple[OperatorKind, ...] = tuple(OperatorKind)
    modulations: tuple[str, ...] = MODULATIONS
    n: int = 1024
    guard: Optional[int] = None  # None means k + 2
    amplitude: float = 1.0
    theta: float = 0.0
    theta_q: float = 0.0

    def guard_for(self, k: int) -> int:
        return k + 2 if self.guard is None else self.guard

    def validate(self) -> None:
        for name in ("lambdas", "betas", "orders", "kinds", "modulations"):
            if not getattr(self, name):
                raise InvalidParameter(f"{name} must be non-empty")
        for name in ("lambdas", "betas"):
            seq = getattr(self, name)
            if any(b <= a for a, b in zip(seq, seq[1:])):
                raise InvalidParameter(f"{name} must be strictly increasing")
        for kind in self.kinds:
            for k in self.orders:
                check_order(kind, k)
        for m in self.modulations:
            if m not in MODULATIONS:
                raise InvalidParameter(f"unknown modulation {m!r}")
        kmax = max(abs(k) for k in self.orders)
        need = 4 * kmax + 2 * max(self.guard_for(k) for k in self.orders)
        if self.n <= need:
            raise InvalidParameter(f"N={self.n} must exceed 4*max(k) + 2*guard = {need}")


@dataclass(frozen=True)
class SweepRow:
    kind: OperatorKind
    k: int
    modulation: str
    beta: float
    aser_db: float


@dataclass
class SweepResult:
    rows: list[SweepRow]
    skipped: list[tuple[str, float, float, str]] = field(default_factory=list)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["kind", "k", "modulation", "beta", "aser_db"])
        for r in self.rows:
            w.writerow([r.kind.value, r.k, r.modulation, repr(float(r.beta)), format_db(r.aser_db)])
        return buf.getvalue()

    def select(self, kind: "OperatorKind | str", k: int, modulation: str) -> list[SweepRow]:
        kind = OperatorKind.parse(kind)
        return [r for r in self.rows if r.kind is kind and r.k == k and r.modulation == modulation]

    def value(self, kind, k: int, modulation: str, beta: float) -> float:
        for r in self.select(kind, k, modulation):
            if r.beta == beta:
                return r.aser_db
        raise KeyError((kind, k, modulation, beta))


def format_db(v: float) -> str:
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    if math.isnan(v):
        return "nan"
    return repr(float(v))


def to_db(ratio: float) -> float:
    """Amplitude-ratio decibels, ``20 log10``."""
    if math.isinf(ratio):
        return math.inf
    if ratio <= 0:
        return -math.inf
    return 20.0 * math.log10(ratio)


def desired_output(kind: "OperatorKind | str", k: int, sig: ModulatedSignal) -> np.ndarray:
    """Cosine response evaluated on the signal's amplitude and frequency tracks."""
    return cosine_response(kind, k, sig.amp_track, sig.freq_track)


def _window(out, guard: int) -> tuple[int, int]:
    start, stop = out.start + guard, out.stop - guard
    if stop <= start:
        raise SignalTooShort(f"no samples left after discarding a guard band of {guard}")
    return start, stop


def approximation_error(kind: "OperatorKind | str", k: int, sig: ModulatedSignal,
                        guard: Optional[int] = None) -> tuple[np.ndarray, np.ndarray]:
    """Error ``E[n] = op(x)[n] - D[n]`` on the guarded valid range.

    Returns ``(D, E)`` restricted to that range; ``guard`` defaults to
    ``k + 2`` samples discarded at each end.
    """
    out = apply_operator(kind, sig.samples, k)
    start, stop = _window(out, k + 2 if guard is None else guard)
    d = desired_output(kind, k, sig)[start:stop]
    return d, out.values[start:stop] - d


def aser(D: np.ndarray, E: np.ndarray, atol: float = 0.0) -> float:
    """Average signal-to-error ratio ``mean|D| / mean|E|`` (linear).

    Returns ``inf`` when ``mean|E| <= atol``.

    Raises:
        EmptyRange: if ``D`` or ``E`` is empty.
    """
    D = np.asarray(D, dtype=float)
    E = np.asarray(E, dtype=float)
    if D.size == 0 or E.size == 0:
        raise EmptyRange("ASER of an empty range")
    if D.shape != E.shape:
        raise ValueError("D and E must cover the same range")
    me = float(np.mean(np.abs(E)))
    if me <= atol:
        return math.inf
    return float(np.mean(np.abs(D))) / me


def _mean_over_lambda(values: Sequence[float]) -> float:
    finite = [v for v in values if math.isfinite(v)]
    if not values:
        return math.nan
    if not finite:
        return math.inf
    total = 0.0
    for v in finite:
        total += v
    return total / len(finite)


def _signals(cfg: SweepConfig, modulation: str, beta: float):
    sigs, skipped = [], []
    for lam in cfg.lambdas:
        try:
            sigs.append(make_signal(modulation.lower(), lam, beta, cfg.omega_c, cfg.theta,
                                    cfg.theta_q, cfg.amplitude, cfg.n))
        except InvalidParameter as exc:
            if modulation == "FM" and "exceeds pi" in str(exc):
                skipped.append((modulation, beta, lam, str(exc)))
            else:
                raise
    return sigs, skipped


def _cell_block(cfg: SweepConfig, modulation: str, beta: float):
    """All (kind, k) rows for one modulation and depth, lambda batched."""
    sigs, skipped = _signals(cfg, modulation, beta)
    rows = []
    if sigs:
        x = np.stack([s.samples for s in sigs])
        amp = np.stack([s.amp_track for s in sigs])
        freq = np.stack([s.freq_track for s in sigs])
        power = amp * amp
    for kind in cfg.kinds:
        for k in cfg.orders:
            ratios: list[float] = []
            if sigs:
                out = apply_operator(kind, x, k)
                start, stop = _window(out, cfg.guard_for(k))
                d = cosine_response(kind, k, amp[:, start:stop], freq[:, start:stop])
                e = out.values[:, start:stop] - d
                md = np.mean(np.abs(d), axis=-1)
                me = np.mean(np.abs(e), axis=-1)
                scale = np.mean(power[:, start:stop], axis=-1)
                for i in range(len(sigs)):
                    if me[i] <= EXACT_RTOL * scale[i]:
                        ratios.append(math.inf)
                    else:
                        ratios.append(float(md[i]) / float(me[i]))
            rows.append(SweepRow(kind, k, modulation, beta, to_db(_mean_over_lambda(ratios))))
    return rows, skipped


def run_sweep(cfg: Optional[SweepConfig] = None, jobs: Optional[int] = None) -> SweepResult:
    """Run the benchmark sweep.

    Work is split into one task per (modulation, beta); ``jobs`` only sets
    how many run at once, so the result does not depend on it.  Rows are
    ordered by modulation, beta, kind, then order.
    """
    cfg = cfg or SweepConfig()
    cfg.validate()
    tasks = [(m, b) for m in cfg.modulations for b in cfg.betas]
    jobs = max(1, jobs or os.cpu_count() or 1)
    if jobs == 1:
        blocks = [_cell_block(cfg, m, b) for m, b in tasks]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            blocks = list(pool.map(lambda t: _cell_block(cfg, *t), tasks))
    result = SweepResult(rows=[])
    for rows, skipped in blocks:
        result.rows.extend(rows)
        result.skipped.extend(skipped)
    return result


def reference_cell(cfg: SweepConfig, kind: "OperatorKind | str", k: int, modulation: str, beta: float) -> float:
    """Single-signal, sequential evaluation of one sweep row (dB)."""
    kind = OperatorKind.parse(kind)
    sigs, _ = _signals(cfg, modulation, beta)
    ratios = []
    for sig in sigs:
        d, e = approximation_error(kind, k, sig, cfg.guard_for(k))
        out = apply_operator(kind, sig.samples, k)
        start, stop = _window(out, cfg.guard_for(k))
        scale = float(np.mean(sig.amp_track[start:stop] ** 2))
        ratios.append(aser(d, e, atol=EXACT_RTOL * scale))
    return to_db(_mean_over_lambda(ratios))
