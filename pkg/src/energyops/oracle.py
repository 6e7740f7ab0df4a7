"""Closed-form cosine responses and total-energy identities.

``cosine_response`` gives the constant output of each operator on
``A cos(W n + theta)``.  Replacing ``A`` by ``|X(e^{jW})|`` and integrating
over ``[-pi, pi]`` gives the operator's total energy; comparing that with a
direct sum of operator output exposes the sign problem of higher-order DEOs
(e.g. ``-1/4`` for the ordinary DEO of order 4) and its absence for PDEOs.
"""
from __future__ import annotations

import math
from typing import Optional

import numpy as np
from numpy.typing import ArrayLike

from .deo import OperatorKind, check_order
from .errors import InvalidParameter
from .operators import apply_operator, window_reach
from .sequence import OperatorOutput

DEFAULT_GRID = 2 ** 16
MIN_GRID = 4096


def _aprime_even(k: int, A: np.ndarray, w: np.ndarray) -> np.ndarray:
    # Psi of the (k/2 - 1)-th backward difference of a unit cosine: build the
    # three samples Psi needs straight from the cosine, then form the TKEO.
    m = k // 2 - 1
    n = np.arange(-1, 2)
    j = np.arange(m + 1)
    coef = np.array([(-1) ** jj * math.comb(m, jj) for jj in j], dtype=float)
    phase = w[..., None, None] * (n[:, None] - j[None, :])
    d = np.cos(phase) @ coef
    psi = d[..., 1] ** 2 - d[..., 0] * d[..., 2]
    return (-1) ** (1 + k // 2) * A ** 2 * psi


def cosine_response(kind: "OperatorKind | str", k: int, A: ArrayLike, omega: ArrayLike):
    """Steady-state output of the order-``k`` operator on ``A cos(omega n + theta)``.

    ``A`` and ``omega`` broadcast, so per-sample amplitude and frequency
    tracks can be passed directly.  Returns a float for scalar inputs.

    Raises:
        OrderOutOfRange: for an order outside the kind's domain.
    """
    kind = OperatorKind.parse(kind)
    k = check_order(kind, k)
    scalar = np.ndim(A) == 0 and np.ndim(omega) == 0
    A, w = np.broadcast_arrays(np.asarray(A, dtype=float), np.asarray(omega, dtype=float))
    A2 = A * A
    odd = k % 2 == 1

    if kind is OperatorKind.ORDINARY:
        out = A2 * np.sin(w) * np.sin((k - 1) * w)
    elif kind is OperatorKind.BACKWARD:
        s = np.sin(w / 2) ** k
        if odd:
            tail = (np.sin((k / 2 - 1) * w) + np.sin(k / 2 * w)) / 2
            sign = (-1) ** ((k + 1) // 2)
        else:
            tail = (np.cos((k / 2 - 1) * w) + np.cos(k / 2 * w)) / 2
            sign = (-1) ** (1 + k // 2)
        out = 2.0 ** k * sign * A2 * s * tail
    elif kind is OperatorKind.SYMMETRIC:
        out = np.zeros_like(w) if odd else (-1) ** (1 + k // 2) * A2 * np.sin(w) ** k
    elif kind is OperatorKind.ALTERNATIVE:
        if odd:
            out = np.zeros_like(w)
        else:
            out = (-1) ** (1 + k // 2) * 2.0 ** k * A2 * np.sin(w / 2) ** k * np.cos(w / 2) ** 2
    elif kind is OperatorKind.APRIME:
        out = np.zeros_like(w) if odd else _aprime_even(k, A, w)
    elif kind is OperatorKind.PDEO_ORDINARY:
        q = (k - 1) / 4 if odd else (k - 2) / 4
        out = 4 * A2 * np.sin(w) ** 2 * np.sin(q * w) ** 2
    elif kind is OperatorKind.PDEO_BACKWARD:
        p = k - 1 if odd else k - 2
        out = 2.0 ** p * A2 * np.sin(w) ** 2 * np.sin(w / 2) ** p
    elif kind is OperatorKind.PDEO_SYMMETRIC:
        out = A2 * np.sin(w) ** (k + 1 if odd else k)
    else:  # pragma: no cover
        raise AssertionError(kind)
    return float(out) if scalar else out


def total_energy(y: OperatorOutput) -> float:
    """Sum of all defined samples of an operator output."""
    v = y.valid
    if v.size == 0:
        return 0.0
    return float(np.sum(v))


def zero_pad(x: ArrayLike, width: int) -> np.ndarray:
    """Embed ``x`` in ``width`` zeros on each side."""
    x = np.asarray(x, dtype=float)
    return np.pad(x, [(0, 0)] * (x.ndim - 1) + [(width, width)])


def operator_energy(kind: "OperatorKind | str", x: ArrayLike, k: int) -> float:
    """Total energy of a finite-support signal treated as zero outside its samples."""
    padded = zero_pad(x, window_reach(k))
    return total_energy(apply_operator(kind, padded, k))


def frequency_grid(grid: int = DEFAULT_GRID) -> np.ndarray:
    """``grid`` ascending frequencies ``-pi + 2 pi i / grid``, ``i = 0..grid-1``."""
    if grid < MIN_GRID or grid & (grid - 1):
        raise InvalidParameter(f"grid must be a power of two >= {MIN_GRID}, got {grid}")
    return -np.pi + 2 * np.pi * np.arange(grid) / grid


def dtft(x: ArrayLike, omega: np.ndarray) -> np.ndarray:
    """``X(e^{jw}) = sum_n x[n] e^{-jwn}`` by direct (Horner) summation."""
    x = np.asarray(x, dtype=float)
    z = np.exp(-1j * omega)
    acc = np.zeros_like(z)
    for v in x[::-1]:
        acc = acc * z + v
    return acc


def dtft_magnitude(x: ArrayLike, grid: int = DEFAULT_GRID) -> np.ndarray:
    """``|X(e^{jw})|`` on :func:`frequency_grid`."""
    return np.abs(dtft(x, frequency_grid(grid)))


def spectral_energy(x: ArrayLike, kind: "OperatorKind | str", k: int, grid: int = DEFAULT_GRID,
                    magnitude: Optional[np.ndarray] = None) -> float:
    """Total energy from the spectrum: ``(1/pi) int D(|X(e^{jw})|, w) dw``.

    The integral over one period uses the trapezoid rule on ``grid`` uniform
    points (``w = +-pi`` counted once, as the integrand is periodic).  Terms
    are summed in ascending frequency order.  A precomputed ``magnitude``
    from :func:`dtft_magnitude` may be passed to reuse one transform across
    several operators.
    """
    kind = OperatorKind.parse(kind)
    omega = frequency_grid(grid)
    mag = np.abs(dtft(x, omega)) if magnitude is None else magnitude
    d = cosine_response(kind, k, mag, omega)
    return float(np.sum(d) * (2 * np.pi / grid) / np.pi)
