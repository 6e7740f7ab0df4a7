"""Flat ``key = value`` sweep configuration files."""
from __future__ import annotations

import ast
import math
import operator
from dataclasses import replace
from typing import Iterable

from ..aser import MODULATIONS, SweepConfig, grid
from ..deo import OperatorKind


class ConfigError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Div: operator.truediv}


def number(text: str) -> float:
    """Parse a float, allowing ``pi`` and ``+ - * /`` (e.g. ``pi/2``)."""
    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return float(node.value)
        if isinstance(node, ast.Name) and node.id == "pi":
            return math.pi
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        raise ValueError(f"not a number: {text!r}")

    try:
        return ev(ast.parse(text.strip(), mode="eval"))
    except (SyntaxError, ZeroDivisionError) as exc:
        raise ValueError(f"not a number: {text!r}") from exc


def number_grid(text: str) -> tuple[float, ...]:
    """``start:step:stop`` or a comma-separated list."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"grid must be start:step:stop, got {text!r}")
        return grid(*(number(p) for p in parts))
    return tuple(number(p) for p in text.split(",") if p.strip())


def _int_list(text: str) -> tuple[int, ...]:
    return tuple(int(p) for p in text.split(",") if p.strip())


def _kinds(text: str) -> tuple[OperatorKind, ...]:
    if text.strip() == "all":
        return tuple(OperatorKind)
    return tuple(OperatorKind.parse(p) for p in text.split(",") if p.strip())


def _modulations(text: str) -> tuple[str, ...]:
    mods = tuple(p.strip().upper() for p in text.split(",") if p.strip())
    for m in mods:
        if m not in MODULATIONS:
            raise ValueError(f"unknown modulation {m!r}")
    return mods


def _guard(text: str):
    return None if text.strip() in ("auto", "k+2", "k + 2") else int(text)


FIELDS = {
    "omega_c": number,
    "lambdas": number_grid,
    "betas": number_grid,
    "orders": _int_list,
    "kinds": _kinds,
    "modulations": _modulations,
    "n": int,
    "guard": _guard,
    "amplitude": number,
    "theta": number,
    "theta_q": number,
}


def parse_config(lines: Iterable[str]) -> SweepConfig:
    """Build a :class:`SweepConfig` from config text; unset keys keep defaults.

    Raises:
        ConfigError: naming the offending line.
    """
    values = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(lineno, f"expected 'key = value', got {raw.strip()!r}")
        key, _, text = (s.strip() for s in line.partition("="))
        if key not in FIELDS:
            raise ConfigError(lineno, f"unknown key {key!r}")
        try:
            values[key] = FIELDS[key](text)
        except ValueError as exc:
            raise ConfigError(lineno, str(exc)) from None
    return replace(SweepConfig(), **values)


def format_config(cfg: SweepConfig) -> str:
    """Serialise every field so the file reproduces ``cfg`` exactly."""
    out = [
        f"omega_c = {cfg.omega_c!r}",
        "lambdas = " + ", ".join(repr(v) for v in cfg.lambdas),
        "betas = " + ", ".join(repr(v) for v in cfg.betas),
        "orders = " + ", ".join(str(k) for k in cfg.orders),
        "kinds = " + ", ".join(k.value for k in cfg.kinds),
        "modulations = " + ", ".join(cfg.modulations),
        f"n = {cfg.n}",
        f"guard = {'auto' if cfg.guard is None else cfg.guard}",
        f"amplitude = {cfg.amplitude!r}",
        f"theta = {cfg.theta!r}",
        f"theta_q = {cfg.theta_q!r}",
    ]
    return "\n".join(out) + "\n"
