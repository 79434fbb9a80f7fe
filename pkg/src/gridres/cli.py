"""Command-line front end: single values, sweeps, verification, fits.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3
computation error (message on stderr). Standard output carries only the
documented payload so it stays machine-parseable.
"""

from __future__ import annotations

import argparse
import csv
import math
import os
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path

from .bounds import bounds_hypercube, bounds_torus2, bounds_torusd
from .errors import GridResError, InsufficientData
from .families import read_edge_list
from .resistance import (
    MAX_TERMS,
    hypercube_ad_direct,
    hypercube_ad_recursive,
    rave,
    rave_hypercube_binomial,
    rave_ring_exact,
    rave_torus,
)
from .verify import (
    all_suites,
    bounds_suite,
    integral_suite,
    oracle_suite,
    recursion_suite,
)

CSV_HEADER = ("family", "d", "dims", "N", "rave", "lower", "upper", "method")

FIT_TARGETS = {
    "linear": ("ring", 1.0 / 12.0),
    "log2d": ("torus2", 1.0 / (2.0 * math.pi)),
    "inverse_d": ("torusd", 0.5),
}


@dataclass(frozen=True)
class SweepRow:
    family: str
    d: int
    dims: tuple[int, ...]
    n: int
    rave: float
    lower: float | None
    upper: float | None
    method: str

    def to_csv(self) -> list[str]:
        return [
            self.family,
            str(self.d),
            "x".join(str(m) for m in self.dims),
            str(self.n),
            _fmt17(self.rave),
            "" if self.lower is None else _fmt17(self.lower),
            "" if self.upper is None else _fmt17(self.upper),
            self.method,
        ]

    @classmethod
    def from_csv(cls, row: list[str]) -> "SweepRow":
        dims = tuple(int(m) for m in row[2].split("x")) if row[2] else ()
        return cls(
            family=row[0],
            d=int(row[1]),
            dims=dims,
            n=int(row[3]),
            rave=float(row[4]),
            lower=float(row[5]) if row[5] else None,
            upper=float(row[6]) if row[6] else None,
            method=row[7],
        )


def _fmt17(x: float) -> str:
    # 17 significant digits round-trip float64 exactly.
    return f"{x:.17g}"


def _int_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc
    if not values:
        raise argparse.ArgumentTypeError("empty integer list")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridres",
        description="Average effective resistance of rings, toroidal grids and hypercubes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rave = sub.add_parser("rave", help="compute one average-resistance value")
    which = p_rave.add_mutually_exclusive_group(required=True)
    which.add_argument("--ring", type=int, metavar="M")
    which.add_argument("--torus", type=_int_list, metavar="M1,M2,...")
    which.add_argument("--hypercube", type=int, metavar="D")
    which.add_argument("--graph", metavar="FILE", help="edge-list file")
    p_rave.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p_rave.add_argument("--max-terms", type=int, default=MAX_TERMS)

    p_sweep = sub.add_parser("sweep", help="write a parameter sweep as CSV")
    p_sweep.add_argument(
        "--family",
        required=True,
        choices=("ring", "torus2", "torus3", "torus4", "hypercube", "torusd"),
    )
    p_sweep.add_argument("--m", type=_int_list, metavar="M,...", help="side lengths")
    p_sweep.add_argument("--d", type=_int_list, metavar="D,...", help="dimensions")
    p_sweep.add_argument("--out", required=True, metavar="FILE")
    p_sweep.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p_sweep.add_argument("--max-terms", type=int, default=MAX_TERMS)

    p_verify = sub.add_parser("verify", help="run cross-validation suites")
    p_verify.add_argument(
        "--suite",
        required=True,
        choices=("oracle", "bounds", "recursion", "integral", "all"),
    )
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p_verify.add_argument("--budget", type=int, default=10**6)

    p_fit = sub.add_parser("fit", help="fit an asymptotic model to sweep rows")
    p_fit.add_argument("--model", required=True, choices=tuple(FIT_TARGETS))
    p_fit.add_argument("--in", dest="infile", required=True, metavar="CSV")

    p_ad = sub.add_parser("hypercube-ad", help="growth-coefficient table")
    p_ad.add_argument("--dmax", type=int, required=True)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "rave":
            return _cmd_rave(args)
        if args.command == "sweep":
            return _cmd_sweep(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "fit":
            return _cmd_fit(args)
        return _cmd_hypercube_ad(args)
    except (GridResError, OSError, ValueError) as exc:
        print(f"gridres: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    sys.exit(main())


def _cmd_rave(args: argparse.Namespace) -> int:
    if args.ring is not None:
        result = rave_ring_exact(args.ring)
    elif args.torus is not None:
        result = rave_torus(args.torus, threads=args.threads, max_terms=args.max_terms)
    elif args.hypercube is not None:
        result = rave_hypercube_binomial(args.hypercube)
    else:
        result = rave(read_edge_list(args.graph), threads=args.threads)
    print(f"{result.value:.15g} method={result.method} terms={result.terms}")
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    rows = _sweep_rows(args.family, args.m, args.d, args.threads, args.max_terms)
    _write_csv_atomic(Path(args.out), rows)
    return 0


def _sweep_rows(
    family: str,
    m_values: list[int] | None,
    d_values: list[int] | None,
    threads: int,
    max_terms: int,
) -> list[SweepRow]:
    rows: list[SweepRow] = []
    if family == "ring":
        _require(m_values, "--m")
        for m in m_values:
            res = rave_ring_exact(m)
            rows.append(SweepRow("ring", 1, (m,), m, res.value, None, None, res.method))
    elif family in ("torus2", "torus3", "torus4"):
        _require(m_values, "--m")
        d = int(family[-1])
        for m in m_values:
            dims = (m,) * d
            res = rave_torus(dims, threads=threads, max_terms=max_terms)
            report = bounds_torus2(m, m) if d == 2 else bounds_torusd(m, d)
            rows.append(
                SweepRow(family, d, dims, m**d, res.value, report.lower, report.upper, res.method)
            )
    elif family == "hypercube":
        _require(d_values, "--d")
        for d in d_values:
            res = rave_hypercube_binomial(d)
            report = bounds_hypercube(d)
            rows.append(
                SweepRow("hypercube", d, (2,) * d, 2**d, res.value, report.lower, report.upper, res.method)
            )
    else:  # torusd: fixed side, dimension range
        _require(m_values, "--m")
        _require(d_values, "--d")
        if len(m_values) != 1:
            raise ValueError("torusd sweeps take exactly one --m value")
        m = m_values[0]
        for d in sorted(d_values):
            dims = (m,) * d
            res = rave_torus(dims, threads=threads, max_terms=max_terms)
            report = bounds_torusd(m, d)
            rows.append(
                SweepRow("torusd", d, dims, m**d, res.value, report.lower, report.upper, res.method)
            )
        return rows  # ordered by d
    rows.sort(key=lambda r: r.n)
    return rows


def _require(values: list[int] | None, flag: str) -> None:
    if not values:
        raise ValueError(f"this family needs {flag}")


def _write_csv_atomic(path: Path, rows: list[SweepRow]) -> None:
    # Write to a sibling temp file and rename, so a failed sweep never
    # leaves a partial CSV behind.
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(CSV_HEADER)
            for row in rows:
                writer.writerow(row.to_csv())
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise


def read_sweep_csv(path: str | Path) -> list[SweepRow]:
    with open(path, newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader)
        if tuple(header) != CSV_HEADER:
            raise ValueError(f"unexpected CSV header {header}")
        return [SweepRow.from_csv(row) for row in reader]


def _cmd_verify(args: argparse.Namespace) -> int:
    suites = {
        "oracle": lambda: oracle_suite(args.seed, args.threads),
        "bounds": lambda: bounds_suite(args.threads),
        "recursion": recursion_suite,
        "integral": lambda: integral_suite(args.seed, args.threads, args.budget),
        "all": lambda: all_suites(args.seed, args.threads, args.budget),
    }
    results = suites[args.suite]()
    for check in results:
        print(check.line())
    failed = sum(1 for check in results if not check.passed)
    print(f"{'FAIL' if failed else 'PASS'} suite={args.suite} checks={len(results)} failures={failed}")
    return 1 if failed else 0


def _cmd_fit(args: argparse.Namespace) -> int:
    family, target = FIT_TARGETS[args.model]
    rows = [row for row in read_sweep_csv(args.infile) if row.family == family]
    if len(rows) < 4:
        raise InsufficientData(
            f"model {args.model} needs >= 4 rows of family {family!r}, found {len(rows)}"
        )
    if args.model == "linear":
        coeff = _slope([float(r.n) for r in rows], [r.rave for r in rows])
    elif args.model == "log2d":
        coeff = _slope([math.log(r.dims[0]) for r in rows], [r.rave for r in rows])
    else:
        xs = [1.0 / r.d for r in rows]
        coeff = sum(x * r.rave for x, r in zip(xs, rows)) / sum(x * x for x in xs)
    rel = abs(coeff - target) / target
    print(f"model={args.model} coefficient={coeff:.15g} target={target:.15g} rel_deviation={rel:.6g}")
    return 0


def _slope(xs: list[float], ys: list[float]) -> float:
    n = len(xs)
    mean_x = sum(xs) / n
    mean_y = sum(ys) / n
    cov = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    var = sum((x - mean_x) ** 2 for x in xs)
    return cov / var


def _cmd_hypercube_ad(args: argparse.Namespace) -> int:
    if args.dmax < 1:
        raise ValueError(f"--dmax must be >= 1, got {args.dmax}")
    print("d a_recursive a_direct d_rave")
    for d in range(args.dmax + 1):
        d_rave = d * rave_hypercube_binomial(d).value
        print(
            f"{d} {_fmt17(hypercube_ad_recursive(d))} "
            f"{_fmt17(hypercube_ad_direct(d))} {_fmt17(d_rave)}"
        )
    return 0
