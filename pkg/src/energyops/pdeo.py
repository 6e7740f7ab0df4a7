"""Positive differential energy operators (PDEOs).

A PDEO of order ``k`` is the TKEO applied to an ``m_k``-th order difference
of the signal, where ``m_k = (k-1)/2`` for odd ``k`` and ``k/2 - 1`` for
even ``k``.  Its steady-state output on a cosine is a non-negative even
function of frequency, so the total energy it measures is never negative.
"""
from __future__ import annotations

import operator

from .deo import OperatorKind, _finish, _ordinary, _psi, check_order
from .differences import _backward, _symmetric, binomial
from .errors import OrderOutOfRange
from .sequence import OperatorOutput, Signal


def m_order(k: int) -> int:
    """Difference order ``m_k`` used by the order-``k`` PDEO."""
    k = operator.index(k)
    if k < 1:
        raise OrderOutOfRange(f"PDEO order k={k} must be >= 1")
    return (k - 1) // 2 if k % 2 else k // 2 - 1


def _ordinary_expansion(x: OperatorOutput, k: int) -> OperatorOutput:
    psi = _psi(x)
    if k % 2:
        m = (k - 1) // 2
        return psi + psi.shift(-m) - _ordinary(x, (5 - k) // 2) - _ordinary(x, (k + 3) // 2).shift(-m)
    m = k // 2 - 1
    return psi + psi.shift(-m) - _ordinary(x, 3 - k // 2) - _ordinary(x, k // 2 + 1).shift(-m)


def _ordinary_direct(x: OperatorOutput, k: int) -> OperatorOutput:
    m = m_order(k)
    return _psi(x - x.shift(-m))


def ordinary_pdeo(x: Signal, k: int, method: str = "expansion") -> OperatorOutput:
    """Ordinary PDEO, the TKEO of ``x[n] - x[n - m_k]``.

    The default evaluates it as two TKEOs minus two ordinary DEOs (orders
    ``2 - m_k`` and ``2 + m_k``); ``method="direct"`` forms the difference
    signal first.  Orders 1 and 2 give the zero operator.
    """
    k = check_order(OperatorKind.PDEO_ORDINARY, k)
    x = OperatorOutput.from_signal(x)
    if method == "expansion":
        out = _ordinary_expansion(x, k)
    elif method == "direct":
        out = _ordinary_direct(x, k)
    else:
        raise ValueError(f"unknown method {method!r}")
    return _finish(out, f"ordinary PDEO k={k}")


def _backward_expansion(x: OperatorOutput, m: int) -> OperatorOutput:
    out = None
    for i in range(m + 1):
        for j in range(m + 1):
            c = binomial(m, i) * binomial(m, j) * (-1) ** (i + j)
            term = c * _ordinary(x, i - j + 2).shift(-i)
            out = term if out is None else out + term
    return out


def backward_pdeo(x: Signal, k: int, method: str = "direct") -> OperatorOutput:
    """Backward PDEO ``Psi(Db^(m_k)(x))``.

    ``method="expansion"`` uses the double binomial sum of shifted ordinary
    DEOs of orders ``2 + i - j``.
    """
    k = check_order(OperatorKind.PDEO_BACKWARD, k)
    m = m_order(k)
    x = OperatorOutput.from_signal(x)
    if method == "direct":
        out = _psi(_backward(x, m))
    elif method == "expansion":
        out = _backward_expansion(x, m)
    else:
        raise ValueError(f"unknown method {method!r}")
    return _finish(out, f"backward PDEO k={k}")


def _symmetric_expansion(x: OperatorOutput, m: int) -> OperatorOutput:
    out = None
    for i in range(m + 1):
        for j in range(m + 1):
            c = binomial(m, i) * binomial(m, j) * (-1) ** (i + j)
            term = c * _ordinary(x, 2 * (j - i + 1)).shift(m - 2 * j)
            out = term if out is None else out + term
    return out * 2.0 ** (-2 * m)


def symmetric_pdeo(x: Signal, k: int, method: str = "direct") -> OperatorOutput:
    """Symmetric PDEO ``Psi(Ds^(m_k)(x))``.

    ``method="expansion"`` uses the ``2^(-2 m_k)`` weighted double sum of
    ordinary DEOs of even orders ``2 (j - i + 1)`` taken at ``n + m_k - 2j``.
    """
    k = check_order(OperatorKind.PDEO_SYMMETRIC, k)
    m = m_order(k)
    x = OperatorOutput.from_signal(x)
    if method == "direct":
        out = _psi(_symmetric(x, m))
    elif method == "expansion":
        out = _symmetric_expansion(x, m)
    else:
        raise ValueError(f"unknown method {method!r}")
    return _finish(out, f"symmetric PDEO k={k}")
