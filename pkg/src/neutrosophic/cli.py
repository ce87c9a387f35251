"""Command line front end: ``neutro {eval,distance,sweep,verify}``.

Exit codes: 0 success, 1 a mandatory verification check failed, 2 bad
arguments or unparsable input, 3 an input value out of range, 4 output not
writable.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .core import NeutrosophicTriplet, OutOfRange, validate
from .entropy import measure_report
from .measures import distance, similarity
from .verify import GridSpec, run_property_suite, suite_passed

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_OUTPUT = 4

PRECISION_ENV = "NEUTRO_PRECISION"

EVAL_COLUMNS = [
    "mu",
    "omega",
    "nu",
    "certainty",
    "score",
    "uncertainty",
    "escort_mu",
    "escort_nu",
    "entropy_nats",
    "entropy_normalized",
]
DISTANCE_INPUT = ["mu1", "omega1", "nu1", "mu2", "omega2", "nu2"]
DISTANCE_COLUMNS = DISTANCE_INPUT + ["distance", "similarity"]
SWEEP_COLUMNS = EVAL_COLUMNS + ["kind"]
VERIFY_COLUMNS = ["check_name", "mandatory", "passed", "cases_run", "skipped", "failure_count", "max_violation"]


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class RunConfig:
    input_path: str = "-"
    output_path: str = "-"
    format: str = "csv"
    precision: int = 12
    grid_step: float = 0.1
    fd_step: float = 1e-4

    def __post_init__(self):
        if self.format not in ("csv", "json"):
            raise ValueError(f"format must be csv or json, got {self.format!r}")
        if not (6 <= self.precision <= 17):
            raise ValueError(f"precision must lie in [6, 17], got {self.precision}")
        if not (0.0 < self.grid_step <= 1.0):
            raise ValueError(f"grid step must lie in (0, 1], got {self.grid_step}")
        if not (0.0 < self.fd_step <= 0.01):
            raise ValueError(f"fd step must lie in (0, 0.01], got {self.fd_step}")


def format_number(x: float, precision: int) -> str:
    """Shortest decimal that round-trips ``x``, capped at ``precision`` significant digits."""
    if x == 0.0:
        return "0"
    for digits in range(1, precision + 1):
        s = f"{x:.{digits}g}"
        if float(s) == x:
            return s
    return f"{x:.{precision}g}"


# --------------------------------------------------------------------------
# input


def _is_number(token: str) -> bool:
    try:
        float(token)
    except ValueError:
        return False
    return True


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise CliError(EXIT_PARSE, f"cannot read {path}: {exc}") from exc


def read_rows(path: str, columns: Sequence[str]) -> list[tuple[int, list[float]]]:
    """Parse numeric rows, returning ``(line_number, values)`` pairs.

    A header row is recognized by a non-numeric first token; named columns
    are then picked by header name, otherwise the leading columns are used.
    """
    rows = []
    picks: list[int] | None = None
    for lineno, record in enumerate(csv.reader(io.StringIO(_read_text(path))), start=1):
        fields = [f.strip() for f in record]
        if not any(fields):
            continue
        if picks is None:
            if not _is_number(fields[0]):
                if all(c in fields for c in columns):
                    picks = [fields.index(c) for c in columns]
                else:
                    picks = list(range(len(columns)))
                continue
            picks = list(range(len(columns)))
        if len(fields) <= max(picks):
            raise CliError(EXIT_PARSE, f"line {lineno}: expected {len(columns)} columns, got {len(fields)}")
        try:
            rows.append((lineno, [float(fields[k]) for k in picks]))
        except ValueError as exc:
            raise CliError(EXIT_PARSE, f"line {lineno}: {exc}") from exc
    return rows


def _triplet(lineno: int, row_index: int, values: Sequence[float], suffix: str = "") -> NeutrosophicTriplet:
    try:
        return validate(*values)
    except OutOfRange as exc:
        raise CliError(
            EXIT_VALIDATION,
            f"row {row_index} (line {lineno}): {exc.component}{suffix}={exc.value!r} is outside [0, 1]",
        ) from exc


# --------------------------------------------------------------------------
# output


def render(records: list[dict], columns: Sequence[str], fmt: str, precision: int) -> str:
    def cell(v):
        return format_number(v, precision) if isinstance(v, float) else v

    if fmt == "json":
        out = [
            {c: (float(format_number(r[c], precision)) if isinstance(r[c], float) else r[c]) for c in columns}
            for r in records
        ]
        return json.dumps(out, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for r in records:
        writer.writerow([cell(r[c]) for c in columns])
    return buf.getvalue()


def write_output(path: str, text: str) -> None:
    """Write ``text`` to ``path`` atomically, or to stdout for ``-``."""
    if path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    directory = os.path.dirname(os.path.abspath(path))
    tmp = None
    try:
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".neutro-", suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except OSError as exc:
        if tmp is not None and os.path.exists(tmp):
            os.unlink(tmp)
        raise CliError(EXIT_OUTPUT, f"cannot write {path}: {exc}") from exc


# --------------------------------------------------------------------------
# commands


def _report_record(x: NeutrosophicTriplet) -> dict:
    rep = measure_report(x)
    return {
        "mu": x.mu,
        "omega": x.omega,
        "nu": x.nu,
        "certainty": rep.certainty,
        "score": rep.score,
        "uncertainty": rep.uncertainty,
        "escort_mu": rep.escort_mu,
        "escort_nu": rep.escort_nu,
        "entropy_nats": rep.entropy_nats,
        "entropy_normalized": rep.entropy_normalized,
    }


def cmd_eval(config: RunConfig) -> int:
    rows = read_rows(config.input_path, EVAL_COLUMNS[:3])
    records = [_report_record(_triplet(line, k, vals)) for k, (line, vals) in enumerate(rows, start=1)]
    write_output(config.output_path, render(records, EVAL_COLUMNS, config.format, config.precision))
    return EXIT_OK


def cmd_distance(config: RunConfig) -> int:
    records = []
    for k, (line, vals) in enumerate(read_rows(config.input_path, DISTANCE_INPUT), start=1):
        p1 = _triplet(line, k, vals[:3], "1")
        p2 = _triplet(line, k, vals[3:], "2")
        rec = dict(zip(DISTANCE_INPUT, vals))
        rec["distance"] = distance(p1, p2)
        rec["similarity"] = similarity(p1, p2)
        records.append(rec)
    write_output(config.output_path, render(records, DISTANCE_COLUMNS, config.format, config.precision))
    return EXIT_OK


def _kind_label(i_mu: int, i_nu: int, n: int) -> str:
    if i_mu + i_nu < n:
        return "intuitionistic"
    if i_mu + i_nu > n:
        return "paraconsistent"
    # mu + nu = 1 satisfies both conditions: plain fuzzy information
    return "fuzzy"


def cmd_sweep(config: RunConfig) -> int:
    try:
        n = GridSpec(config.grid_step).divisions
    except ValueError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from exc
    records = []
    for i, j, k in product(range(n + 1), repeat=3):
        rec = _report_record(NeutrosophicTriplet(i / n, j / n, k / n))
        rec["kind"] = _kind_label(i, k, n)
        records.append(rec)
    write_output(config.output_path, render(records, SWEEP_COLUMNS, config.format, config.precision))
    return EXIT_OK


def cmd_verify(config: RunConfig) -> int:
    try:
        grid = GridSpec(config.grid_step)
    except ValueError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from exc
    reports = run_property_suite(grid, fd_step=config.fd_step)
    if config.format == "json":
        text = json.dumps([r.to_dict() for r in reports], indent=2) + "\n"
    else:
        records = [{c: r.to_dict()[c] for c in VERIFY_COLUMNS} for r in reports]
        for rec in records:
            rec["mandatory"] = str(rec["mandatory"]).lower()
            rec["passed"] = str(rec["passed"]).lower()
        text = render(records, VERIFY_COLUMNS, "csv", config.precision)
    write_output(config.output_path, text)
    failed = [r.check_name for r in reports if r.mandatory and not r.passed]
    print(f"{len(reports)} checks, {len(failed)} mandatory failures", file=sys.stderr)
    for name in failed:
        print(f"FAILED {name}", file=sys.stderr)
    return EXIT_OK if suite_passed(reports) else EXIT_CHECK_FAILED


COMMANDS = {"eval": cmd_eval, "distance": cmd_distance, "sweep": cmd_sweep, "verify": cmd_verify}


def build_parser() -> argparse.ArgumentParser:
    env_precision = os.environ.get(PRECISION_ENV)
    try:
        default_precision = int(env_precision) if env_precision else 12
    except ValueError:
        default_precision = 12

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", default="-", help="input CSV (default: stdin)")
    common.add_argument("--output", default="-", help="output path (default: stdout)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument(
        "--precision", type=int, default=default_precision,
        help=f"significant digits, 6..17 (default: ${PRECISION_ENV} or 12)",
    )
    common.add_argument("--grid-step", type=float, default=0.1, help="lattice spacing for sweep/verify")
    common.add_argument("--fd-step", type=float, default=1e-4, help="finite-difference step for verify")

    parser = argparse.ArgumentParser(prog="neutro", description="Neutrosophic information measures.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("eval", parents=[common], help="all measures for rows mu,omega,nu")
    sub.add_parser("distance", parents=[common], help="distance and similarity for rows of two triplets")
    sub.add_parser("sweep", parents=[common], help="all measures over a lattice of the unit cube")
    sub.add_parser("verify", parents=[common], help="run the property suite and report")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig(
            input_path=args.input,
            output_path=args.output,
            format=args.format,
            precision=args.precision,
            grid_step=args.grid_step,
            fd_step=args.fd_step,
        )
    except ValueError as exc:
        print(f"neutro: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        return COMMANDS[args.command](config)
    except CliError as exc:
        print(f"neutro: error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
