"""Command-line front end.

Subcommands: ``cohomology``, ``lr``, ``plethysm``, ``resolution``,
``verify`` and ``report``.  ``verify`` exits 0 when every check passes, 1
when a counterexample is found and 2 when some result is indeterminate.
Usage errors exit 64.  Sweep defaults can be set with ``BBW_JOBS``,
``BBW_N``, ``BBW_K``, ``BBW_LEMMA`` and ``BBW_FORMAT``.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .bbw import SpaceParams, cohomology_gr, cohomology_ogr_hom_spinors, cohomology_ogr_schur_spinor
from .diagrams import YoungDiagram
from .render import render
from .resolution import build_resolution
from .tensor import lr_product, wedge_sym2
from .verify import SWEEPS, bondal_orlov_report, run_sweep_task

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_INDETERMINATE, EXIT_USAGE = 0, 1, 2, 64

CHECKS = tuple(SWEEPS)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def parse_range(text: str) -> list[int]:
    """``"6"``, ``"6,8,10"`` or ``"6..10"`` (inclusive) to a sorted list."""
    values: set[int] = set()
    for part in text.split(","):
        part = part.strip()
        m = re.fullmatch(r"(\d+)\s*\.\.\s*(\d+)", part)
        if m:
            lo, hi = int(m.group(1)), int(m.group(2))
            if lo > hi:
                raise UsageError(f"empty range {part!r}")
            values.update(range(lo, hi + 1))
        elif part.isdigit():
            values.add(int(part))
        else:
            raise UsageError(f"cannot parse range {text!r}")
    if not values:
        raise UsageError("range is empty")
    return sorted(values)


def _sign(text: str) -> int:
    if text not in ("+", "-"):
        raise UsageError(f"sign must be + or -, got {text!r}")
    return 1 if text == "+" else -1


def _diagram(text: str) -> YoungDiagram:
    try:
        return YoungDiagram.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


@dataclass(frozen=True)
class SweepConfig:
    Ns: tuple[int, ...]
    ks: tuple[int, ...]
    checks: tuple[str, ...]
    format: str = "text"
    jobs: int = 1
    out: Optional[str] = None

    def __post_init__(self):
        if not self.Ns or not self.ks or not self.checks:
            raise UsageError("sweep ranges must be nonempty")
        if self.format not in ("text", "json"):
            raise UsageError(f"unknown format {self.format!r}")
        if self.jobs < 1:
            raise UsageError("--jobs must be positive")

    def tasks(self) -> list[tuple[str, int, int]]:
        out = []
        for check in self.checks:
            Ns = self.Ns
            if check == "same-p-B":
                # even N stands for its odd reduction N - 1
                Ns = tuple(sorted({N if N % 2 else N - 1 for N in Ns}))
            out += [(check, N, k) for N in Ns for k in self.ks]
        return out


def run_sweeps(config: SweepConfig) -> list:
    tasks = config.tasks()
    if config.jobs == 1 or len(tasks) == 1:
        return [run_sweep_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=config.jobs) as pool:
        return list(pool.map(run_sweep_task, tasks))


def _env(name: str, default):
    return os.environ.get(f"BBW_{name}", default)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bbwspin", description=__doc__.split("\n")[0])
    p.add_argument("--jobs", type=int, default=int(_env("JOBS", "1")), help="worker processes for sweeps")
    p.add_argument("--out", help="write output to this file instead of stdout")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("cohomology", help="Borel-Bott-Weil cohomology of one bundle")
    c.add_argument("--space", choices=("gr", "ogr"), required=True)
    c.add_argument("--N", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--shape", required=True)
    c.add_argument("--twist", type=int, default=0)
    c.add_argument("--spinor", default="+", help="sign of the spinor bundle (ogr)")
    c.add_argument("--hom-spinors", help="signs s1,s2 of S^vee (x) S' (ogr)")
    c.add_argument("--format", choices=("text", "json"), default="json")

    lr = sub.add_parser("lr", help="Littlewood-Richardson product")
    lr.add_argument("--mu", required=True)
    lr.add_argument("--nu", required=True)
    lr.add_argument("--max-height", type=int)
    lr.add_argument("--format", choices=("text", "json"), default="json")

    pl = sub.add_parser("plethysm", help="exterior powers of Sym^2 U")
    pl.add_argument("--m", type=int, required=True)
    pl.add_argument("--k", type=int, required=True)
    pl.add_argument("--format", choices=("text", "json"), default="json")

    r = sub.add_parser("resolution", help="resolution of a pushed-forward spinor bundle")
    r.add_argument("--N", type=int, required=True)
    r.add_argument("--k", type=int, required=True)
    r.add_argument("--sign", default="+")
    r.add_argument("--format", choices=("text", "json"), default="text")

    v = sub.add_parser("verify", help="run a verification sweep")
    v.add_argument("--lemma", default=_env("LEMMA", "all"), help="one of " + ", ".join(CHECKS) + " or all")
    v.add_argument("--N", default=_env("N", None))
    v.add_argument("--k", default=_env("K", None))
    v.add_argument("--format", choices=("text", "json"), default=_env("FORMAT", "text"))

    rep = sub.add_parser("report", help="check the cohomological inputs of the full-faithfulness criterion")
    rep.add_argument("--genus", type=int, required=True)
    rep.add_argument("--k", type=int, required=True)
    rep.add_argument("--json", action="store_true")
    return p


def _cohomology(args):
    shape = _diagram(args.shape)
    if args.space == "gr":
        return cohomology_gr(args.N, args.k, shape, args.twist)
    if args.twist:
        raise UsageError("--twist is only supported on gr")
    sp = SpaceParams(args.N, args.k)
    if args.hom_spinors:
        parts = args.hom_spinors.split(",")
        if len(parts) != 2:
            raise UsageError("--hom-spinors takes two signs, e.g. +,-")
        return cohomology_ogr_hom_spinors(sp, shape, _sign(parts[0]), _sign(parts[1]))
    return cohomology_ogr_schur_spinor(sp, shape, _sign(args.spinor))


def _verify(args) -> tuple[list, int]:
    if args.N is None or args.k is None:
        raise UsageError("verify needs --N and --k (or BBW_N and BBW_K)")
    checks = CHECKS if args.lemma == "all" else (args.lemma,)
    if any(c not in SWEEPS for c in checks):
        raise UsageError(f"unknown check {args.lemma!r}")
    config = SweepConfig(tuple(parse_range(args.N)), tuple(parse_range(args.k)), checks, args.format, args.jobs)
    results = run_sweeps(config)
    if any(r.counterexamples for r in results):
        code = EXIT_COUNTEREXAMPLE
    elif any(r.indeterminate for r in results):
        code = EXIT_INDETERMINATE
    else:
        code = EXIT_OK
    return results, code


def _execute(args) -> tuple[str, int]:
    cmd = args.command
    if cmd == "cohomology":
        return render(_cohomology(args), args.format), EXIT_OK
    if cmd == "lr":
        product = lr_product(_diagram(args.mu), _diagram(args.nu), args.max_height)
        return render(product, args.format), EXIT_OK
    if cmd == "plethysm":
        return render(wedge_sym2(args.m, args.k), args.format), EXIT_OK
    if cmd == "resolution":
        resolution = build_resolution(SpaceParams(args.N, args.k), _sign(args.sign))
        return render(resolution, args.format), EXIT_OK
    if cmd == "verify":
        results, code = _verify(args)
        return render(results, args.format), code
    if cmd == "report":
        report = bondal_orlov_report(args.genus, args.k)
        code = {"pass": EXIT_OK, "fail": EXIT_COUNTEREXAMPLE}.get(report.verdict, EXIT_INDETERMINATE)
        return render(report, "json" if args.json else "text"), code
    raise UsageError(f"unknown command {cmd!r}")


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI on ``argv`` and return the exit code."""
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
        output, code = _execute(args)
    except UsageError as exc:
        print(f"bbwspin: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"bbwspin: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code or 0
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(output + "\n")
    else:
        sys.stdout.write(output + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
