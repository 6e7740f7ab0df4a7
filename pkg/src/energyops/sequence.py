"""Sample sequences carrying an explicit valid-index range.

Every operator in the package returns an :class:`OperatorOutput`: an array
the same length as the input whose samples outside ``[start, stop)`` are
undefined (stored as NaN).  Arrays may be batched; the sample axis is always
the last one and all rows share one valid range.
"""
from __future__ import annotations

from typing import Union

import numpy as np
from numpy.typing import ArrayLike


class OperatorOutput:
    """Sequence ``values`` that is defined only on ``start <= n < stop``.

    Supports the small algebra needed to write the operators verbatim:
    ``+``, ``-``, ``*`` between outputs (valid ranges intersect), scalar
    scaling, and :meth:`shift`.
    """

    __slots__ = ("values", "start", "stop")

    def __init__(self, values: np.ndarray, start: int, stop: int):
        values = np.asarray(values, dtype=np.float64)
        if values.ndim == 0:
            raise ValueError("signal must have at least one dimension")
        n = values.shape[-1]
        start = max(0, int(start))
        stop = min(n, int(stop))
        self.values = values
        self.start = start
        self.stop = max(start, stop)

    @classmethod
    def from_signal(cls, x: Union[ArrayLike, "OperatorOutput"]) -> "OperatorOutput":
        if isinstance(x, OperatorOutput):
            return x
        arr = np.asarray(x, dtype=np.float64)
        if arr.ndim == 0:
            raise ValueError("signal must have at least one dimension")
        return cls(arr, 0, arr.shape[-1])

    def __len__(self) -> int:
        return self.values.shape[-1]

    @property
    def empty(self) -> bool:
        return self.stop <= self.start

    @property
    def valid(self) -> np.ndarray:
        """View of the defined samples."""
        return self.values[..., self.start:self.stop]

    @property
    def indices(self) -> np.ndarray:
        return np.arange(self.start, self.stop)

    def masked(self) -> "OperatorOutput":
        """Copy with every sample outside the valid range set to NaN."""
        out = np.full_like(self.values, np.nan)
        out[..., self.start:self.stop] = self.values[..., self.start:self.stop]
        return OperatorOutput(out, self.start, self.stop)

    def shift(self, s: int) -> "OperatorOutput":
        """Return ``y`` with ``y[n] = self[n + s]``."""
        s = int(s)
        if s == 0:
            return self
        n = len(self)
        out = np.full_like(self.values, np.nan)
        if abs(s) < n:
            if s > 0:
                out[..., : n - s] = self.values[..., s:]
            else:
                out[..., -s:] = self.values[..., : n + s]
        return OperatorOutput(out, self.start - s, self.stop - s)

    def _binary(self, other, op) -> "OperatorOutput":
        if isinstance(other, OperatorOutput):
            if len(other) != len(self):
                raise ValueError("length mismatch between sequences")
            return OperatorOutput(
                op(self.values, other.values),
                max(self.start, other.start),
                min(self.stop, other.stop),
            )
        return OperatorOutput(op(self.values, other), self.start, self.stop)

    def __add__(self, other):
        return self._binary(other, np.add)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, np.subtract)

    def __rsub__(self, other):
        return OperatorOutput(other - self.values, self.start, self.stop)

    def __mul__(self, other):
        return self._binary(other, np.multiply)

    __rmul__ = __mul__

    def __neg__(self):
        return OperatorOutput(-self.values, self.start, self.stop)

    def __repr__(self) -> str:
        return f"OperatorOutput(shape={self.values.shape}, valid=[{self.start}, {self.stop}))"


Signal = Union[ArrayLike, OperatorOutput]


def intersect(*outputs: OperatorOutput) -> tuple[int, int]:
    """Common valid range of several outputs as ``(start, stop)``."""
    start = max(o.start for o in outputs)
    stop = min(o.stop for o in outputs)
    return start, max(start, stop)
