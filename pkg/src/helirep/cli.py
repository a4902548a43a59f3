"""Batch command-line interface.

Four subcommands: ``zfun`` tabulates the mixed rotation/boost matrix
element along both evaluation routes, ``verify`` runs one named
verification suite, ``gy-build`` assembles a chain system and dumps its
six generator matrices, and ``radial`` integrates a separated radial
system and reports its diagnostics.

Output contract: JSON reports are a single sorted compact object
``{command, inputs, results, residuals, version}``; CSV is a header
plus data rows.  Spin labels parse and print as fraction strings
("3/2"), complex numbers serialize as ``[re, im]`` pairs (paired
``_re``/``_im`` columns in CSV).  Identical invocations produce
byte-identical output.  Exit codes: 0 success, 1 verification failure,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

import numpy as np

from . import __version__
from .gelfand_yaglom import dirac_system, system_from_config
from .halfint import HalfInt
from .hyperspherical import z_factorized, z_grid, z_series, z_series_grid
from .radial import assemble_rfs, bessel_probe, integrate, residual
from .suites import DEFAULT_TOLERANCES, SUITES, run_suite

TOL_ENV = "HELIREP_TOL"


class UsageError(Exception):
    """Bad invocation or unparseable input; maps to exit code 2."""


def _half(text, what):
    try:
        return HalfInt(text)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"cannot parse {what}={text!r} as a spin label: {exc}")


def _parse_grid(text):
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"grid must be START:STOP:N, got {text!r}")
    try:
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise UsageError(f"grid must be START:STOP:N with numeric fields, got {text!r}")
    if count < 1:
        raise UsageError("grid needs at least one point")
    return start, stop, count


def _parse_init(text, dim):
    try:
        values = [complex(part) for part in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"cannot parse --init {text!r}: {exc}")
    if len(values) != dim:
        raise UsageError(
            f"--init has {len(values)} components, the system has {dim}"
        )
    return np.asarray(values, dtype=complex)


def _load_system(source):
    if source == "dirac":
        return dirac_system()
    try:
        with open(source, "r", encoding="utf-8") as handle:
            config = json.load(handle)
    except OSError as exc:
        raise UsageError(f"cannot read chain file {source!r}: {exc}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"chain file {source!r} is not valid JSON: {exc}")
    try:
        return system_from_config(config)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"invalid chain config {source!r}: {exc}")


def _pair(z):
    z = complex(z)
    return [z.real + 0.0, z.imag + 0.0]


def _report(command, inputs, results, residuals):
    return {
        "command": command,
        "inputs": inputs,
        "results": results,
        "residuals": residuals,
        "version": __version__,
    }


def _emit(args, report, csv_header, csv_rows):
    if args.format == "json":
        text = json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n"
    else:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(csv_header)
        writer.writerows(csv_rows)
        text = buffer.getvalue()
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def cmd_zfun(args):
    l = _half(args.l, "--l")
    m = _half(args.m if args.m is not None else args.l, "--m")
    n = _half(args.n if args.n is not None else args.l, "--n")
    if abs(m.twice) > l.twice or abs(n.twice) > l.twice:
        raise UsageError("projections must satisfy |m|, |n| <= l")
    if args.grid:
        start, stop, count = _parse_grid(args.grid)
        thetas = np.linspace(start, stop, count)
        series = z_series_grid(l, m, n, thetas, [args.tau])[:, 0]
        factorized = z_grid(l, m, n, thetas, [args.tau])[:, 0]
    else:
        thetas = np.array([args.theta])
        series = np.array([z_series(l, m, n, args.theta, args.tau)])
        factorized = np.array([z_factorized(l, m, n, args.theta, args.tau)])
    rows = []
    for theta, s, f in zip(thetas, series, factorized):
        rows.append({
            "l": str(l), "m": str(m), "n": str(n),
            "theta": float(theta), "tau": float(args.tau),
            "series": _pair(s), "factorized": _pair(f),
            "discrepancy": float(abs(s - f)),
        })
    worst = max(row["discrepancy"] for row in rows)
    report = _report(
        "zfun",
        {"l": str(l), "m": str(m), "n": str(n), "theta": args.theta,
         "tau": args.tau, "grid": args.grid, "format": args.format},
        {"rows": rows},
        {"max_discrepancy": worst},
    )
    header = ["l", "m", "n", "theta", "tau", "series_re", "series_im",
              "factorized_re", "factorized_im", "discrepancy"]
    table = [
        [row["l"], row["m"], row["n"], repr(row["theta"]), repr(row["tau"]),
         repr(row["series"][0]), repr(row["series"][1]),
         repr(row["factorized"][0]), repr(row["factorized"][1]),
         repr(row["discrepancy"])]
        for row in rows
    ]
    _emit(args, report, header, table)
    return 0


def cmd_verify(args):
    suite = args.suite or args.suite_flag
    if suite is None:
        raise UsageError(f"verify needs a suite name; choices: {sorted(SUITES)}")
    if args.suite and args.suite_flag and args.suite != args.suite_flag:
        raise UsageError("positional suite and --suite disagree")
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choices: {sorted(SUITES)}")
    tol = args.tol
    if tol is None:
        env = os.environ.get(TOL_ENV)
        if env is not None:
            try:
                tol = float(env)
            except ValueError:
                raise UsageError(f"{TOL_ENV}={env!r} is not a number")
    system = None
    if suite in ("gy", "radial") and args.chain:
        system = _load_system(args.chain)
    suite_report = run_suite(suite, tol=tol, system=system)
    report = _report(
        "verify",
        {"suite": suite, "tolerance": suite_report["tolerance"],
         "chain": args.chain, "format": args.format},
        suite_report,
        {row["name"]: row["residual"] for row in suite_report["checks"]},
    )
    header = ["suite", "check", "residual", "tol", "ok"]
    table = [
        [suite, row["name"], repr(row["residual"]), repr(row["tol"]),
         str(row["ok"]).lower()]
        for row in suite_report["checks"]
    ]
    _emit(args, report, header, table)
    return 0 if suite_report["ok"] else 1


_GENERATOR_FIELDS = (
    "lambda1", "lambda2", "lambda3", "lambda1c", "lambda2c", "lambda3c",
)


def cmd_gy_build(args):
    system = _load_system(args.chain)
    out_dir = args.out or "."
    args.out = None  # the report goes to stdout; --out names the directory
    os.makedirs(out_dir, exist_ok=True)
    written = []
    for field in _GENERATOR_FIELDS:
        mat = getattr(system, field)
        payload = {
            "name": field,
            "labels": [str(label) for label in mat.row_labels],
            "matrix": [[_pair(entry) for entry in row] for row in mat.data],
        }
        path = os.path.join(out_dir, f"{field}.json")
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(json.dumps(payload, sort_keys=True,
                                    separators=(",", ":")) + "\n")
        written.append(f"{field}.json")
    dim = system.chain.dim
    report = _report(
        "gy-build",
        {"chain": args.chain, "out": out_dir, "format": args.format},
        {"files": written, "dim": dim,
         "spins": [str(l) for k in range(len(system.chain.reps))
                   for l in system.chain.tower_spins(k)]},
        {},
    )
    header = ["file", "rows", "cols"]
    table = [[name, str(dim), str(dim)] for name in written]
    _emit(args, report, header, table)
    return 0


def cmd_radial(args):
    system = _load_system(args.chain)
    spins = [
        l for k in range(len(system.chain.reps))
        for l in system.chain.tower_spins(k)
    ]
    top = max(spins, key=lambda s: s.twice)
    l0 = _half(args.l0, "--l0") if args.l0 else top
    l0_dot = _half(args.l0_dot, "--l0-dot") if args.l0_dot else top
    try:
        rs = assemble_rfs(system, l0, l0_dot, variant=args.variant)
    except ValueError as exc:
        raise UsageError(str(exc))
    block = rs.block(args.sector)
    if args.init:
        init = _parse_init(args.init, block.dim)
    else:
        init = np.zeros(block.dim, dtype=complex)
        init[0] = 1.0
    start, stop, steps = _parse_grid(args.grid)
    try:
        sol = integrate(rs, start, stop, init, steps, sector=args.sector)
    except ValueError as exc:
        raise UsageError(str(exc))
    defect = residual(rs, sol)
    probe = bessel_probe(sol)
    labels = [str(label) for label in sol.labels]
    report = _report(
        "radial",
        {"chain": args.chain, "l0": str(l0), "l0_dot": str(l0_dot),
         "variant": args.variant, "sector": args.sector,
         "grid": args.grid, "init": [_pair(z) for z in init],
         "format": args.format},
        {"labels": labels, "steps": steps, "rows": steps + 1,
         "probe": probe},
        {"equation_defect": defect},
    )
    header = ["r"]
    for label in labels:
        header.extend([f"re {label}", f"im {label}"])
    table = []
    for r, row in zip(sol.grid, sol.values):
        line = [repr(float(r))]
        for z in row:
            line.extend([repr(z.real + 0.0), repr(z.imag + 0.0)])
        table.append(line)
    _emit(args, report, header, table)
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="helirep",
        description="tabulate, verify, and integrate chain representations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    zfun = sub.add_parser("zfun", help="tabulate both matrix-element routes")
    zfun.add_argument("--l", required=True, help='spin label, e.g. "3/2"')
    zfun.add_argument("--m", help="row projection (default: l)")
    zfun.add_argument("--n", help="column projection (default: l)")
    zfun.add_argument("--theta", type=float, default=0.0)
    zfun.add_argument("--tau", type=float, default=0.0)
    zfun.add_argument("--grid", help="theta sweep START:STOP:N")
    zfun.set_defaults(handler=cmd_zfun)

    verify = sub.add_parser("verify", help="run one verification suite")
    verify.add_argument("suite", nargs="?", choices=sorted(SUITES))
    verify.add_argument("--suite", dest="suite_flag", choices=sorted(SUITES))
    verify.add_argument("--tol", type=float,
                        help=f"override tolerance (also via ${TOL_ENV})")
    verify.add_argument("--chain",
                        help='chain config file or "dirac" (gy/radial suites)')
    verify.set_defaults(handler=cmd_verify)

    build = sub.add_parser("gy-build",
                           help="assemble a chain system; dump generators")
    build.add_argument("--chain", required=True,
                       help='chain config file or "dirac"')
    build.set_defaults(handler=cmd_gy_build)

    radial = sub.add_parser("radial", help="integrate one radial system")
    radial.add_argument("--chain", required=True,
                        help='chain config file or "dirac"')
    radial.add_argument("--l0", help="ansatz weight (default: top tower spin)")
    radial.add_argument("--l0-dot", dest="l0_dot",
                        help="conjugate ansatz weight (default: top tower spin)")
    radial.add_argument("--variant", choices=("printed", "alt"),
                        default="printed")
    radial.add_argument("--sector", choices=("plain", "conjugate"),
                        default="plain")
    radial.add_argument("--grid", default="0.5:60:10000",
                        help="radius range START:STOP:STEPS (rows = STEPS+1)")
    radial.add_argument("--init",
                        help='comma-separated complex samples, e.g. "1,0,1j,0"')
    radial.set_defaults(handler=cmd_radial)

    for cmd in (zfun, verify, build, radial):
        cmd.add_argument("--format", choices=("json", "csv"), default="json")
        cmd.add_argument("--out", help="write output to this file")
    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"helirep: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
