"""Command-line interface: ``apply``, ``verify``, ``sweep`` and ``signal``.

Exit codes: 0 success, 1 verification failure, 2 input or parse error,
3 contract violation (order, length or parameter invariant).
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import io
import math
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .. import __version__
from ..aser import format_db, run_sweep
from ..deo import OperatorKind
from ..errors import EnergyOpError
from ..operators import apply_operator
from ..signals import make_signal, write_csv
from ..verify import DEFAULT_SEED, SUITES
from .config import ConfigError, format_config, number, parse_config
from .svg import line_chart

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_CONTRACT = 0, 1, 2, 3


class InputError(ValueError):
    pass


def read_samples(text: str) -> list[float]:
    """Samples from CSV text: one value per line with an optional header.

    A header naming a ``sample`` or ``value`` column selects that column,
    so the output of ``signal`` can be piped straight back in.
    """
    rows = [(i, line.strip()) for i, line in enumerate(text.splitlines(), start=1) if line.strip()]
    if not rows:
        raise InputError("input contains no samples")
    column = 0
    first_no, first = rows[0]
    try:
        [float(c) for c in first.split(",")]
    except ValueError:
        names = [c.strip().lower() for c in first.split(",")]
        if len(names) == 1:
            column = 0
        else:
            for want in ("sample", "value"):
                if want in names:
                    column = names.index(want)
                    break
            else:
                raise InputError(f"line {first_no}: header has no 'sample' or 'value' column")
        rows = rows[1:]
        if not rows:
            raise InputError("input contains a header but no samples")
    values = []
    for lineno, line in rows:
        cells = line.split(",")
        if len(cells) <= column:
            raise InputError(f"line {lineno}: missing column {column + 1}: {line!r}")
        try:
            v = float(cells[column])
        except ValueError:
            raise InputError(f"line {lineno}: not a number: {cells[column].strip()!r}") from None
        if not math.isfinite(v):
            raise InputError(f"line {lineno}: non-finite value {cells[column].strip()!r}")
        values.append(v)
    return values


def format_output(out) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "value"])
    for n in range(out.start, out.stop):
        w.writerow([n, repr(float(out.values[n]))])
    return buf.getvalue()


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def write_manifest(path: Path, command: str, params: dict, inputs: Sequence[Path], outputs: Sequence[Path]) -> None:
    lines = [f"command = {command}", f"version = {__version__}"]
    lines += [f"param.{k} = {v}" for k, v in params.items()]
    lines += [f"input = {p}" for p in inputs]
    lines += [f"output = {p} sha256={_sha256(p)}" for p in outputs]
    path.write_text("\n".join(lines) + "\n")


def cmd_apply(args) -> int:
    try:
        text = Path(args.input).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc}") from None
    samples = read_samples(text)
    out = apply_operator(args.kind, samples, args.order)
    dest = Path(args.output)
    dest.write_text(format_output(out))
    write_manifest(Path(str(dest) + ".manifest.txt"), "apply",
                   {"kind": args.kind, "order": args.order}, [Path(args.input)], [dest])
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = SUITES[args.suite](seed=args.seed)
    for c in checks:
        print(c.line())
    failed = sum(not c.passed for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed (suite={args.suite}, seed={args.seed})")
    return EXIT_OK if failed == 0 else EXIT_FAILED


def cmd_sweep(args) -> int:
    if args.config:
        try:
            with open(args.config) as fh:
                cfg = parse_config(fh)
        except OSError as exc:
            raise InputError(f"cannot read {args.config}: {exc}") from None
    else:
        cfg = parse_config([])
    result = run_sweep(cfg, jobs=args.jobs)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / "sweep.csv"
    csv_path.write_text(result.to_csv())
    written = [csv_path]
    for k in cfg.orders:
        for mod in cfg.modulations:
            series = {}
            for kind in cfg.kinds:
                rows = result.select(kind, k, mod)
                series[kind.value] = ([r.beta for r in rows], [r.aser_db for r in rows])
            path = out_dir / f"aser_{mod.lower()}_k{k}.svg"
            path.write_text(line_chart(series, title=f"{mod} ASER, k={k}, omega_c={cfg.omega_c:.4g}",
                                       xlabel="beta", ylabel="ASER (dB)"))
            written.append(path)
    for mod, beta, lam, reason in result.skipped:
        print(f"skipped {mod} beta={beta!r} lambda={lam!r}: {reason}", file=sys.stderr)
    params = {"config": args.config or "(defaults)", "seed": args.seed,
              "skipped_points": len(result.skipped)}
    params.update({f"cfg.{line.split(' = ', 1)[0]}": line.split(" = ", 1)[1]
                   for line in format_config(cfg).splitlines()})
    write_manifest(out_dir / "manifest.txt", "sweep", params,
                   [Path(args.config)] if args.config else [], written)
    print(f"wrote {len(result.rows)} rows to {csv_path} and {len(written) - 1} plots")
    return EXIT_OK


def cmd_signal(args) -> int:
    sig = make_signal(args.modulation, args.lam, args.beta, args.omega_c, args.theta,
                      args.theta_q, args.amplitude, args.n)
    dest = Path(args.output)
    with open(dest, "w", newline="") as fh:
        write_csv(sig, fh)
    params = {k: getattr(args, k) for k in ("modulation", "lam", "beta", "omega_c", "theta", "theta_q", "amplitude", "n")}
    write_manifest(Path(str(dest) + ".manifest.txt"), "signal", {k: repr(v) for k, v in params.items()}, [], [dest])
    return EXIT_OK


def _num(text: str) -> float:
    try:
        return number(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="RNG seed for verification suites")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="parallel sweep workers")

    parser = argparse.ArgumentParser(prog="energyops", description=__doc__.splitlines()[0], parents=[common])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("apply", parents=[common], help="apply an operator to a CSV signal")
    p.add_argument("input")
    p.add_argument("--kind", required=True, choices=[k.value for k in OperatorKind])
    p.add_argument("-k", "--order", type=int, required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", parents=[common], help="run the ASER benchmark sweep")
    p.add_argument("--config", help="key = value config file (defaults when omitted)")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("signal", parents=[common], help="generate an AM or FM test signal")
    p.add_argument("modulation", choices=["am", "fm"])
    p.add_argument("--lam", type=_num, default=0.1, help="message bandwidth ratio lambda")
    p.add_argument("--beta", type=_num, default=0.5, help="modulation ratio")
    p.add_argument("--omega-c", type=_num, default=math.pi / 2, help="carrier, radians/sample (pi/2 allowed)")
    p.add_argument("--theta", type=_num, default=0.0)
    p.add_argument("--theta-q", type=_num, default=0.0)
    p.add_argument("--amplitude", type=_num, default=1.0)
    p.add_argument("--n", type=int, default=1024)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_signal)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if not hasattr(args, "seed"):
        args.seed = DEFAULT_SEED
    if not hasattr(args, "jobs"):
        args.jobs = os.cpu_count() or 1
    try:
        return args.func(args)
    except (InputError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EnergyOpError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
