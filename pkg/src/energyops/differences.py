"""Exact binomial coefficients and m-th order backward/symmetric differences."""
from __future__ import annotations

import math
import operator

from .errors import OrderOutOfRange, SignalTooShort
from .sequence import OperatorOutput, Signal

MAX_DIFF_ORDER = 60


def binomial(m: int, j: int) -> int:
    """Exact ``C(m, j)`` for ``0 <= j <= m <= 60``."""
    if m < 0 or m > MAX_DIFF_ORDER:
        raise OrderOutOfRange(f"difference order m={m} outside [0, {MAX_DIFF_ORDER}]")
    if j < 0 or j > m:
        raise ValueError(f"binomial index j={j} outside [0, {m}]")
    return math.comb(m, j)


def binomial0(a: int, b: int) -> int:
    """``C(a, b)`` extended by zero whenever ``a < 0``, ``b < 0`` or ``b > a``."""
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


def _check(m: int) -> int:
    m = operator.index(m)
    if m < 0 or m > MAX_DIFF_ORDER:
        raise OrderOutOfRange(f"difference order m={m} outside [0, {MAX_DIFF_ORDER}]")
    return m


def _backward(x: OperatorOutput, m: int) -> OperatorOutput:
    if m == 0:
        return x
    out = x * 1.0
    for j in range(1, m + 1):
        out = out + (-1) ** j * binomial(m, j) * x.shift(-j)
    return out


def _symmetric(x: OperatorOutput, m: int) -> OperatorOutput:
    if m == 0:
        return x
    out = x.shift(m)
    for j in range(1, m + 1):
        out = out + (-1) ** j * binomial(m, j) * x.shift(m - 2 * j)
    return out * 2.0 ** -m


def backward_diff(x: Signal, m: int = 1) -> OperatorOutput:
    """m-th order backward difference.

    ``out[n] = sum_j (-1)^j C(m, j) x[n - j]``, defined on ``[m, len - 1]``
    for a plain signal.  Also accepts an :class:`OperatorOutput`, whose valid
    range is shrunk accordingly.

    Raises:
        OrderOutOfRange: if ``m`` is negative or above 60.
        SignalTooShort: if the result would have no defined sample.
    """
    m = _check(m)
    x = OperatorOutput.from_signal(x)
    if x.stop - x.start <= m:
        raise SignalTooShort(f"backward difference of order {m} needs more than {m} samples")
    return _backward(x, m).masked()


def symmetric_diff(x: Signal, m: int = 1) -> OperatorOutput:
    """m-th order centred difference.

    ``out[n] = 2^-m sum_j (-1)^j C(m, j) x[n + m - 2j]``, defined on
    ``[m, len - 1 - m]`` for a plain signal.

    Raises:
        OrderOutOfRange: if ``m`` is negative or above 60.
        SignalTooShort: if the input has ``2m`` or fewer samples.
    """
    m = _check(m)
    x = OperatorOutput.from_signal(x)
    if x.stop - x.start <= 2 * m:
        raise SignalTooShort(f"symmetric difference of order {m} needs more than {2 * m} samples")
    return _symmetric(x, m).masked()
