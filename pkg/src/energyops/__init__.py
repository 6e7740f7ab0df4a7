"""Discrete higher-order differential energy operators and positive DEOs.

Submodules: :mod:`.differences`, :mod:`.deo`, :mod:`.pdeo`, :mod:`.oracle`,
:mod:`.signals`, :mod:`.aser`, :mod:`.cli`.
"""
__version__ = "0.1.0"

from .deo import (
    OperatorKind,
    alternative_deo,
    aprime_deo,
    backward_deo,
    ordinary_deo,
    symmetric_deo,
    tkeo,
)
from .differences import backward_diff, binomial, symmetric_diff
from .errors import (
    EmptyRange,
    EnergyOpError,
    InvalidParameter,
    OrderOutOfRange,
    SignalTooShort,
    UnsupportedKind,
)
from .operators import apply_operator
from .oracle import cosine_response, operator_energy, spectral_energy, total_energy
from .pdeo import backward_pdeo, m_order, ordinary_pdeo, symmetric_pdeo
from .sequence import OperatorOutput

__all__ = [
    "OperatorKind", "OperatorOutput", "alternative_deo", "aprime_deo", "apply_operator",
    "backward_deo", "backward_diff", "backward_pdeo", "binomial", "cosine_response",
    "m_order", "operator_energy", "ordinary_deo", "ordinary_pdeo", "spectral_energy",
    "symmetric_deo", "symmetric_diff", "symmetric_pdeo", "tkeo", "total_energy",
    "EmptyRange", "EnergyOpError", "InvalidParameter", "OrderOutOfRange",
    "SignalTooShort", "UnsupportedKind",
]
