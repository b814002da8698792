"""Command-line front end: ``casimir-eft {eval,sweep,check,match}``.

Parameters take a scalar or a range ``min:max:count:lin|log``.  Sweeps run
over the Cartesian product in the order L, beta (or T), m, alpha, with the
last one varying fastest.  Exit codes: 0 success, 1 other failure
(for example a breached tolerance), 2 invalid input, 3 convergence
failure, 4 no sign convention reconciles the identities.
"""

import argparse
import csv
import dataclasses
import io
import itertools
import json
import math
import os
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor
from datetime import datetime, timezone

import numpy as np

from .audit import audit, default_grid
from .dimred import match_highT
from .domain import ALPHA_QED, EftCoefficients, PlateSystem, b1_coefficient, validate
from .eft import SignConvention, total_free_energy
from .errors import CasimirError, ConvergenceError, ValidationError
from .modesum import SumConfig
from .thermo import DerivativeConfig, casimir_force, entropy

__all__ = ["main", "build_parser", "parse_range", "load_config", "evaluate_point", "CSV_COLUMNS"]

CSV_COLUMNS = (
    "L",
    "beta",
    "T",
    "m",
    "alpha",
    "b1",
    "regime",
    "F_total",
    "F_blackbody",
    "F_plate_const",
    "F_boundary",
    "F1a",
    "F1b",
    "F_closed_regime",
    "force",
    "force_bulk_subtracted",
    "entropy",
    "err_bound",
)
DIAGNOSTIC_COLUMN = "diagnostic"
OUTPUT_DIR_ENV = "CASIMIR_EFT_OUTPUT_DIR"
MATCH_TOL = 1e-10

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_VALIDATION = 2
EXIT_CONVERGENCE = 3
EXIT_IRRECONCILABLE = 4

_PART_COLUMNS = {
    "F_blackbody": "blackbody",
    "F_plate_const": "plate_constant",
    "F_boundary": "boundary_sum",
    "F1a": "order_alpha_a",
    "F1b": "order_alpha_b",
}


class UsageError(Exception):
    """Malformed command-line value; maps to exit code 2."""


# ---------------------------------------------------------------- parsing


def parse_range(text, name="value"):
    """Scalar ``x`` or ``min:max:count:lin|log`` -> list of floats."""
    parts = str(text).split(":")
    try:
        if len(parts) == 1:
            return [float(parts[0])]
        if len(parts) != 4:
            raise ValueError
        lo, hi, count, kind = float(parts[0]), float(parts[1]), int(parts[2]), parts[3]
    except ValueError:
        raise UsageError(f"{name}: expected a number or min:max:count:lin|log, got {text!r}") from None
    if count < 1:
        raise UsageError(f"{name}: count must be >= 1")
    if not lo < hi:
        raise UsageError(f"{name}: range needs min < max")
    if kind == "lin":
        vals = np.linspace(lo, hi, count)
    elif kind == "log":
        if lo <= 0:
            raise UsageError(f"{name}: log range needs min > 0")
        vals = np.geomspace(lo, hi, count)
    else:
        raise UsageError(f"{name}: spacing must be 'lin' or 'log', got {kind!r}")
    return [float(v) for v in vals]


def load_config(path):
    """SumConfig from a flat ``key = value`` file; ``#`` starts a comment."""
    defaults = SumConfig()
    types = {f.name: type(getattr(defaults, f.name)) for f in dataclasses.fields(SumConfig)}
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, val = (s.strip() for s in line.partition("="))
            if not sep or key not in types:
                raise UsageError(f"{path}:{lineno}: unknown or malformed entry {line!r}")
            try:
                if types[key] is tuple:
                    values[key] = tuple(int(float(v)) for v in val.split(","))
                elif types[key] is int:
                    values[key] = int(float(val))
                else:
                    values[key] = float(val)
            except ValueError:
                raise UsageError(f"{path}:{lineno}: bad value for {key}: {val!r}") from None
    try:
        return SumConfig(**values)
    except (CasimirError, TypeError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def parse_tolerances(items):
    """``--tol`` entries: ``VALUE`` for every identity or ``IDENTITY=VALUE``."""
    from .audit import IDENTITIES

    out = {}
    for item in items or ():
        name, sep, val = item.rpartition("=")
        try:
            tol = float(val)
        except ValueError:
            raise UsageError(f"--tol: bad value {item!r}") from None
        if not tol >= 0:
            raise UsageError("--tol: tolerance must be non-negative")
        if not sep:
            out.update({k: tol for k in IDENTITIES})
        elif name in IDENTITIES:
            out[name] = tol
        else:
            raise UsageError(f"--tol: unknown identity {name!r}")
    return out


def _grid(args, require=True):
    if args.L is None or (args.beta is None and args.T is None):
        if require:
            raise UsageError("--L and one of --beta/--T are required")
        return None
    Ls = parse_range(args.L, "--L")
    if args.T is not None:
        betas = [1.0 / t if t != 0 else math.inf for t in parse_range(args.T, "--T")]
    else:
        betas = parse_range(args.beta, "--beta")
    ms = parse_range(args.m, "--m")
    alphas = parse_range(args.alpha, "--alpha")
    return [(L, b, m, a) for L, b, m, a in itertools.product(Ls, betas, ms, alphas)]


def _validate_grid(grid):
    for L, beta, m, alpha in grid:
        validate(PlateSystem(L=L, beta=beta, m=m, alpha=alpha), emit=False)


# ------------------------------------------------------------- evaluation


def evaluate_point(L, beta, m, alpha, conv=SignConvention.as_printed, cfg=None):
    """One CSV record (dict keyed by :data:`CSV_COLUMNS`, plus ``diagnostic``)."""
    sysm = PlateSystem(L=L, beta=beta, m=m, alpha=alpha)
    row = {"L": L, "beta": beta, "T": 1.0 / beta, "m": m, "alpha": alpha}
    try:
        validate(sysm, emit=False)
        row["b1"] = b1_coefficient(sysm)
        res = total_free_energy(sysm, cfg, conv)
        row["regime"] = res.annotations["regime"]
        row["F_total"] = res.total
        for col, part in _PART_COLUMNS.items():
            row[col] = res.parts.get(part, 0.0)
        row["F_closed_regime"] = res.annotations.get("closed_form", math.nan)
        row["force"] = casimir_force(sysm, cfg, DerivativeConfig(), conv)
        row["force_bulk_subtracted"] = casimir_force(
            sysm, cfg, DerivativeConfig(subtract_bulk=True), conv
        )
        row["entropy"] = entropy(sysm, cfg, DerivativeConfig(), conv)
        row["err_bound"] = res.error_bound
        row[DIAGNOSTIC_COLUMN] = ""
    except CasimirError as exc:
        for col in CSV_COLUMNS:
            row.setdefault(col, math.nan)
        if not isinstance(row["regime"], str):
            row["regime"] = ""
        row["err_bound"] = math.inf
        row[DIAGNOSTIC_COLUMN] = f"{type(exc).__name__}: {exc}"
    return row


def _eval_task(task):
    point, conv, cfg = task
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return evaluate_point(*point, conv=conv, cfg=cfg)


def _evaluate_all(grid, conv, cfg, jobs):
    tasks = [(p, conv, cfg) for p in grid]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_eval_task, tasks))
    return [_eval_task(t) for t in tasks]


# ---------------------------------------------------------------- output


def _fmt(v):
    if isinstance(v, str):
        return v
    return format(float(v), ".17g")


def _json_value(v):
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def _timestamp():
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _render_csv(rows, stamp):
    buf = io.StringIO()
    cols = list(CSV_COLUMNS)
    if any(r[DIAGNOSTIC_COLUMN] for r in rows):
        cols.append(DIAGNOSTIC_COLUMN)
    if stamp:
        buf.write(f"# generated {_timestamp()}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for r in rows:
        writer.writerow([_fmt(r[c]) for c in cols])
    return buf.getvalue()


def _render_json(doc, stamp):
    if stamp:
        doc = {"generated": _timestamp(), **doc}
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def _records_doc(rows):
    failed = any(r[DIAGNOSTIC_COLUMN] for r in rows)
    cols = list(CSV_COLUMNS) + ([DIAGNOSTIC_COLUMN] if failed else [])
    return {"records": [{c: _json_value(r[c]) for c in cols} for r in rows]}


def _resolve_output(path):
    if path is None:
        return None
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not os.path.isabs(path):
        path = os.path.join(base, path)
    parent = os.path.dirname(path)
    if parent:
        os.makedirs(parent, exist_ok=True)
    return path


def _emit(text, args):
    path = _resolve_output(args.output)
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _rows_exit(rows):
    diags = [r[DIAGNOSTIC_COLUMN] for r in rows if r[DIAGNOSTIC_COLUMN]]
    if not diags:
        return EXIT_OK
    if any(d.startswith(ConvergenceError.__name__) for d in diags):
        return EXIT_CONVERGENCE
    return EXIT_FAIL


# -------------------------------------------------------------- commands


def cmd_eval(args, cfg):
    grid = _grid(args)
    if len(grid) != 1:
        raise UsageError("eval takes scalar parameters; use sweep for ranges")
    _validate_grid(grid)
    rows = _evaluate_all(grid, args.convention, cfg, 1)
    fmt = args.format or "json"
    text = _render_csv(rows, args.stamp) if fmt == "csv" else _render_json(_records_doc(rows), args.stamp)
    _emit(text, args)
    return _rows_exit(rows)


def cmd_sweep(args, cfg):
    grid = _grid(args)
    _validate_grid(grid)
    rows = _evaluate_all(grid, args.convention, cfg, args.jobs)
    fmt = args.format or "csv"
    text = _render_csv(rows, args.stamp) if fmt == "csv" else _render_json(_records_doc(rows), args.stamp)
    _emit(text, args)
    return _rows_exit(rows)


def cmd_check(args, cfg):
    grid = _grid(args, require=False)
    if grid is None:
        grid = default_grid(m=parse_range(args.m)[0], alpha=parse_range(args.alpha)[0])
    _validate_grid(grid)
    result = audit(grid, cfg, parse_tolerances(args.tol))
    _emit(_render_json(result.to_dict(), args.stamp), args)
    if result.reconciling_convention is None:
        return EXIT_IRRECONCILABLE
    return EXIT_OK if result.all_pass else EXIT_FAIL


def cmd_match(args, cfg):
    grid = _grid(args)
    _validate_grid(grid)
    reports = []
    for L, beta, m, alpha in grid:
        sysm = PlateSystem(L=L, beta=beta, m=m, alpha=alpha)
        coeffs = None
        if args.b1 is not None:
            coeffs = EftCoefficients(b1=args.b1, e1=args.b1, e2=args.b1)
        rep = match_highT(sysm, args.convention, coeffs)
        d = rep.to_dict()
        d.update(m=m, alpha=alpha, b1=coeffs.b1 if coeffs else b1_coefficient(sysm))
        reports.append(d)
    if (args.format or "json") == "csv":
        cols = ("L", "beta", "m", "alpha", "b1", "regime", "lhs", "rhs", "residual")
        buf = io.StringIO()
        if args.stamp:
            buf.write(f"# generated {_timestamp()}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for d in reports:
            w.writerow([_fmt(d[c]) for c in cols])
        text = buf.getvalue()
    else:
        text = _render_json({"reports": reports}, args.stamp)
    _emit(text, args)
    return EXIT_OK if all(d["residual"] < MATCH_TOL for d in reports) else EXIT_FAIL


COMMANDS = {"eval": cmd_eval, "sweep": cmd_sweep, "check": cmd_check, "match": cmd_match}


# ---------------------------------------------------------------- parser


def _add_common(p):
    p.add_argument("--L", help="plate separation: value or min:max:count:lin|log")
    temp = p.add_mutually_exclusive_group()
    temp.add_argument("--beta", help="inverse temperature (value or range)")
    temp.add_argument("--T", help="temperature (value or range), converted to beta = 1/T")
    p.add_argument("--m", default="1000", help="electron mass in inverse length units (default 1000)")
    p.add_argument("--alpha", default=repr(ALPHA_QED), help="fine-structure constant (default 1/137.036)")
    p.add_argument(
        "--convention",
        default=SignConvention.as_printed.value,
        choices=[c.value for c in SignConvention],
        help="sign of the bulk order-alpha term (default as_printed)",
    )
    p.add_argument("--config", help="flat key=value file overriding engine settings")
    p.add_argument("--output", "-o", help=f"output file (relative paths resolve under ${OUTPUT_DIR_ENV})")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--no-timestamp", dest="stamp", action="store_false", help="omit the generated-at line")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="casimir-eft",
        description="Finite-temperature Casimir free energy with order-alpha corrections.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "eval": "evaluate one point",
        "sweep": "evaluate a parameter grid",
        "check": "run the identity audit",
        "match": "compare the 3d effective theory with the high-T free energy",
    }
    subs = {name: sub.add_parser(name, help=h) for name, h in helps.items()}
    for p in subs.values():
        _add_common(p)
    subs["check"].add_argument(
        "--tol", action="append", help="tolerance override: VALUE or IDENTITY=VALUE (repeatable)"
    )
    subs["match"].add_argument("--b1", type=float, help="override the matching coefficient b1 = e1 = e2")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.jobs < 1:
            raise UsageError("--jobs must be >= 1")
        cfg = load_config(args.config) if args.config else SumConfig()
        return COMMANDS[args.command](args, cfg)
    except (UsageError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except (CasimirError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
