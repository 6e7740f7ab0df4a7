"""Discrete differential energy operators (DEOs).

Five discretisations are provided: ordinary (time shifts), backward,
symmetric, alternative, and the a' operator obtained from the alternative
recursion without parity branches.  Each has a ``method`` switch selecting
between its direct definition and an algebraically equivalent form
(expansion in ordinary DEOs, or a recursion); the two paths share no code
beyond the difference primitives and are used to check each other.
"""
from __future__ import annotations

import enum
import operator

from .differences import _backward, _symmetric, binomial, binomial0
from .errors import OrderOutOfRange, SignalTooShort
from .sequence import OperatorOutput, Signal

MAX_ORDER = 32


class OperatorKind(enum.Enum):
    ORDINARY = "ordinary"
    BACKWARD = "backward"
    SYMMETRIC = "symmetric"
    ALTERNATIVE = "alternative"
    APRIME = "aprime"
    PDEO_ORDINARY = "pdeo-ordinary"
    PDEO_BACKWARD = "pdeo-backward"
    PDEO_SYMMETRIC = "pdeo-symmetric"

    @classmethod
    def parse(cls, value: "OperatorKind | str") -> "OperatorKind":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            names = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown operator kind {value!r} (expected one of {names})") from None

    @property
    def is_pdeo(self) -> bool:
        return self.value.startswith("pdeo-")

    @property
    def min_order(self) -> int:
        """Smallest admissible order ``k`` for this kind."""
        if self is OperatorKind.ORDINARY:
            return -MAX_ORDER
        return 1

    def __str__(self) -> str:
        return self.value


def check_order(kind: OperatorKind, k: int) -> int:
    """Validate ``k`` for ``kind`` and return it as a plain int."""
    k = operator.index(k)
    if abs(k) > MAX_ORDER:
        raise OrderOutOfRange(f"order k={k} exceeds the cap |k| <= {MAX_ORDER}")
    if k < kind.min_order:
        raise OrderOutOfRange(f"order k={k} not defined for the {kind.value} operator (k >= {kind.min_order})")
    return k


def _finish(out: OperatorOutput, what: str) -> OperatorOutput:
    if out.empty:
        raise SignalTooShort(f"signal too short for {what}")
    return out.masked()


# -- ordinary -------------------------------------------------------------

def _ordinary(x: OperatorOutput, k: int) -> OperatorOutput:
    # Used verbatim for every integer k, which already satisfies the
    # negative-order reflection identity.
    return x * x.shift(k - 2) - x.shift(-1) * x.shift(k - 1)


def _psi(x: OperatorOutput) -> OperatorOutput:
    return x * x - x.shift(-1) * x.shift(1)


def ordinary_deo(x: Signal, k: int) -> OperatorOutput:
    """Ordinary discrete DEO ``x[n] x[n+k-2] - x[n-1] x[n+k-1]``.

    Any integer ``|k| <= 32`` is accepted.
    """
    k = check_order(OperatorKind.ORDINARY, k)
    return _finish(_ordinary(OperatorOutput.from_signal(x), k), f"ordinary DEO k={k}")


def tkeo(x: Signal) -> OperatorOutput:
    """Teager-Kaiser energy operator ``x[n]^2 - x[n-1] x[n+1]``."""
    return _finish(_psi(OperatorOutput.from_signal(x)), "TKEO")


# -- backward ------------------------------------------------------------

def _backward_direct(x: OperatorOutput, k: int) -> OperatorOutput:
    return _backward(x, 1) * _backward(x, k - 1) - x * _backward(x, k)


def _backward_expansion(x: OperatorOutput, k: int) -> OperatorOutput:
    out = None
    for j in range(1, k + 1):
        term = (-1) ** j * binomial(k - 1, j - 1) * _ordinary(x, j).shift(1 - j)
        out = term if out is None else out + term
    return out


def backward_deo(x: Signal, k: int, method: str = "direct") -> OperatorOutput:
    """Backward DEO ``Db(x) Db^(k-1)(x) - x Db^(k)(x)``.

    ``method="expansion"`` evaluates the same operator as a signed binomial
    sum of shifted ordinary DEOs of orders ``1..k``.
    """
    k = check_order(OperatorKind.BACKWARD, k)
    x = OperatorOutput.from_signal(x)
    if method == "direct":
        out = _backward_direct(x, k)
    elif method == "expansion":
        out = _backward_expansion(x, k)
    else:
        raise ValueError(f"unknown method {method!r}")
    return _finish(out, f"backward DEO k={k}")


# -- symmetric -----------------------------------------------------------

def _symmetric_direct(x: OperatorOutput, k: int) -> OperatorOutput:
    return _symmetric(x, 1) * _symmetric(x, k - 1) - x * _symmetric(x, k)


def _symmetric_expansion(x: OperatorOutput, k: int) -> OperatorOutput:
    out = None
    for j in range(k):
        u = _ordinary(x, k - 2 * j)
        term = (-1) ** j * binomial(k - 1, j) * (u + u.shift(1))
        out = term if out is None else out + term
    return out * 2.0 ** -k


def symmetric_deo(x: Signal, k: int, method: str = "direct") -> OperatorOutput:
    """Symmetric DEO built from centred differences.

    ``method="expansion"`` uses the ``2^-k`` weighted sum of ordinary DEOs of
    orders ``k, k-2, ..., 2-k`` at ``n`` and ``n+1``.
    """
    k = check_order(OperatorKind.SYMMETRIC, k)
    x = OperatorOutput.from_signal(x)
    if method == "direct":
        out = _symmetric_direct(x, k)
    elif method == "expansion":
        out = _symmetric_expansion(x, k)
    else:
        raise ValueError(f"unknown method {method!r}")
    return _finish(out, f"symmetric DEO k={k}")


# -- alternative ---------------------------------------------------------

def _alternative_direct(x: OperatorOutput, k: int) -> OperatorOutput:
    if k == 1:
        return x * 0.0
    if k % 2:
        h = (k - 1) // 2
        assert 2 * h == k - 1
        return _backward(x, 1) * _backward(x, k - 1).shift(h) - x * _backward(x, k).shift(h)
    h = k // 2
    assert 2 * h == k
    return _backward(x, 1).shift(1) * _backward(x, k - 1).shift(h - 1) - x * _backward(x, k).shift(h)


def _alternative_recursion(x: OperatorOutput, k: int) -> OperatorOutput:
    if k == 1:
        return x * 0.0
    if k == 2:
        return _psi(x)
    dx = _backward(x, 1)
    if k % 2:
        return _backward(_alternative_recursion(x, k - 1), 1) - _alternative_recursion(dx, k - 2).shift(1)
    return _backward(_alternative_recursion(x, k - 1).shift(1), 1) - _alternative_recursion(dx, k - 2)


def alternative_deo(x: Signal, k: int, method: str = "direct") -> OperatorOutput:
    """Alternative DEO with centre-aligned difference windows.

    Odd and even ``k`` use different integer window shifts.  ``k=1`` is the
    zero operator and ``k=2`` reduces to the TKEO.  ``method="recursion"``
    evaluates the parity-split recursion down to those two cases.
    """
    k = check_order(OperatorKind.ALTERNATIVE, k)
    x = OperatorOutput.from_signal(x)
    if method == "direct":
        out = _alternative_direct(x, k)
    elif method == "recursion":
        out = _alternative_recursion(x, k)
    else:
        raise ValueError(f"unknown method {method!r}")
    return _finish(out, f"alternative DEO k={k}")


# -- a' ------------------------------------------------------------------

def _aprime_closed(x: OperatorOutput, k: int) -> OperatorOutput:
    out = x * 0.0
    for i in range(k // 2 + 1):
        c = binomial0(k - 2 - i, i)
        if c == 0:
            continue
        term = _backward(_psi(_backward(x, i)), k - 2 - 2 * i)
        out = out + (-1) ** i * c * term
    return out


def _aprime_recursion(x: OperatorOutput, k: int) -> OperatorOutput:
    if k == 1:
        return x * 0.0
    if k == 2:
        return _psi(x)
    return _backward(_aprime_recursion(x, k - 1), 1) - _aprime_recursion(_backward(x, 1), k - 2)


def aprime_deo(x: Signal, k: int, method: str = "direct") -> OperatorOutput:
    """The a' operator, a signed sum of differenced TKEOs of differences.

    The default evaluates the closed-form sum over ``i <= k // 2`` with
    ``C(k-2-i, i)`` taken as zero outside Pascal's triangle;
    ``method="recursion"`` runs ``Db(Y_{k-1}(x)) - Y_{k-2}(Db(x))``.
    """
    k = check_order(OperatorKind.APRIME, k)
    x = OperatorOutput.from_signal(x)
    if method == "direct":
        out = _aprime_closed(x, k)
    elif method == "recursion":
        out = _aprime_recursion(x, k)
    else:
        raise ValueError(f"unknown method {method!r}")
    return _finish(out, f"a' DEO k={k}")
