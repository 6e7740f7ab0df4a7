"""Dispatch from :class:`OperatorKind` to the operator implementations."""
from __future__ import annotations

from typing import Callable, Optional

from .deo import (
    OperatorKind,
    alternative_deo,
    aprime_deo,
    backward_deo,
    ordinary_deo,
    symmetric_deo,
)
from .pdeo import backward_pdeo, ordinary_pdeo, symmetric_pdeo
from .sequence import OperatorOutput, Signal

OPERATORS: dict[OperatorKind, Callable[..., OperatorOutput]] = {
    OperatorKind.ORDINARY: ordinary_deo,
    OperatorKind.BACKWARD: backward_deo,
    OperatorKind.SYMMETRIC: symmetric_deo,
    OperatorKind.ALTERNATIVE: alternative_deo,
    OperatorKind.APRIME: aprime_deo,
    OperatorKind.PDEO_ORDINARY: ordinary_pdeo,
    OperatorKind.PDEO_BACKWARD: backward_pdeo,
    OperatorKind.PDEO_SYMMETRIC: symmetric_pdeo,
}


def apply_operator(kind: "OperatorKind | str", x: Signal, k: int, method: Optional[str] = None) -> OperatorOutput:
    """Apply the order-``k`` operator of ``kind`` to ``x``."""
    func = OPERATORS[OperatorKind.parse(kind)]
    if method is None:
        return func(x, k)
    return func(x, k, method=method)


def window_reach(k: int) -> int:
    """Upper bound on how far (in samples) any order-``k`` operator looks from ``n``.

    Used to size zero padding so that every window touching a nonzero sample
    lies inside the padded signal.
    """
    return 2 * abs(k) + 4
