# cli/router.py
from __future__ import annotations

import argparse
import csv
import io
import logging
import sys
from typing import Callable, Dict, List, Optional, Sequence, TextIO, Tuple, get_args

from pydantic import BaseModel

from census.models import Census
from census.service import class_counts, constant_C, get_census, load_or_build_census, max_genus
from census.store import class_record, read_census_file, write_census_file
from cli.contracts import (
    AsymptoticReport,
    CensusReport,
    ConstantsReport,
    CountReport,
    GenusSummary,
    GeometryReport,
    GraphCount,
    KCount,
    OutputFormat,
    Rational,
    ReportEnvelope,
    StatsReport,
)
from core.config import TOOL_NAME, TOOL_VERSION
from core.errors import BudgetExceeded
from counting.asymptotics import asymptotic_closed, asymptotic_orbit_count, asymptotic_total
from counting.service import count_embeddings, count_orbits_upto, orbit_statistics
from geometry.models import HyperbolicParams
from geometry.service import short_orbit_bound
from providers.factory import build_job_runner, get_providers

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

# Frozen CSV schemas; documented in docs/runtime/README.md
CSV_COLUMNS: Dict[str, List[str]] = {
    "census": ["k", "h", "b", "aut", "baut", "key", "word"],
    "constants": ["k", "h", "classes", "c_num", "c_den"],
    "count": ["k", "h", "genus", "punctures", "mode", "key", "count"],
    "asymptotic": ["k", "h", "genus", "punctures", "kind", "num", "den"],
    "stats": [
        "k", "genus", "punctures", "orbits", "disk_orbits", "distinct_orbits",
        "disk_num", "disk_den", "distinct_num", "distinct_den",
    ],
    "geometry": ["length", "c_x", "genus", "punctures", "budget", "k", "count"],
}

Rows = List[List[object]]
Handler = Callable[[argparse.Namespace, "CensusResolver"], Tuple[BaseModel, Rows]]


# ---------------------------------------------------------------------
# Census resolution
# ---------------------------------------------------------------------

class CensusResolver:
    """
    Picks the census source for one run.

    --census-file wins for the rank it holds; --threads builds with a
    dedicated worker pool; otherwise the process-wide cached census is used.
    """

    def __init__(self, census_file: Optional[str], threads: Optional[int]) -> None:
        self.census_file = census_file
        self.threads = threads
        self._file_census: Optional[Census] = None
        self._built: Dict[int, Census] = {}

    def _from_file(self) -> Census:
        if self._file_census is None:
            assert self.census_file is not None
            self._file_census = read_census_file(self.census_file)
        return self._file_census

    def __call__(self, k: int, strict: bool = True) -> Census:
        if self.census_file:
            c = self._from_file()
            if c.k == k:
                return c
            if strict:
                raise ValueError(f"census file holds k={c.k}, command needs k={k}")

        if self.threads is None:
            return get_census(k)

        if k not in self._built:
            p = get_providers()
            self._built[k] = load_or_build_census(
                k, storage=p.storage, runner=build_job_runner(self.threads), settings=p.settings
            )
        return self._built[k]


# ---------------------------------------------------------------------
# Handlers
# ---------------------------------------------------------------------

def _genus_summary(census: Census) -> List[GenusSummary]:
    counts = class_counts(census)
    return [
        GenusSummary(h=h, classes=counts.get(h, 0), C=Rational.of(constant_C(census.k, h, census)))
        for h in range(max_genus(census.k) + 1)
    ]


def _handle_census(args: argparse.Namespace, resolve: CensusResolver) -> Tuple[BaseModel, Rows]:
    census = resolve(args.k)
    if args.out:
        write_census_file(args.out, census)
        logger.info("census written: k=%s path=%s", census.k, args.out)

    classes = census.classes if args.genus is None else census.genus_classes(args.genus)
    records = [class_record(c) for c in classes]
    report = CensusReport(k=census.k, genus=args.genus, summary=_genus_summary(census), classes=records)
    rows: Rows = [[r.k, r.h, r.b, r.aut, r.baut, r.key, r.word] for r in records]
    return report, rows


def _handle_constants(args: argparse.Namespace, resolve: CensusResolver) -> Tuple[BaseModel, Rows]:
    census = resolve(args.k)
    summary = _genus_summary(census)
    if args.h is not None:
        value = constant_C(args.k, args.h, census)
        classes = len(census.genus_classes(args.h))
        return Rational.of(value), [[args.k, args.h, classes, value.numerator, value.denominator]]

    report = ConstantsReport(
        k=args.k,
        C_k=Rational.of(constant_C(args.k, 0, census)),
        planar_classes=len(census.genus_classes(0)),
        by_genus=summary,
    )
    rows: Rows = [[args.k, s.h, s.classes, s.C.num, s.C.den] for s in summary]
    return report, rows


def _handle_count(args: argparse.Namespace, resolve: CensusResolver) -> Tuple[BaseModel, Rows]:
    mode = args.mode.replace("-", "_")
    exclude = bool(args.exclude_punctured_disks)

    if args.up_to:
        censuses = {kk: resolve(kk, strict=False) for kk in range(args.k + 1)}
        total = count_orbits_upto(args.k, args.genus, args.punctures, mode, censuses, exclude)
        report = CountReport(
            k=args.k, genus=args.genus, punctures=args.punctures, mode=mode,
            exclude_punctured_disks=exclude, up_to=True, count=total,
        )
        return report, [[args.k, "", args.genus, args.punctures, mode, "total", total]]

    if args.h is None:
        raise ValueError("count needs --h unless --up-to is given")

    census = resolve(args.k)
    per_graph = [
        GraphCount(
            key=graph.key_hex,
            h=graph.h,
            b=graph.b,
            baut=graph.baut_order,
            count=count_embeddings(graph, args.genus, args.punctures, mode, exclude),
        )
        for graph in census.genus_classes(args.h)
    ]
    total = sum(p.count for p in per_graph)
    report = CountReport(
        k=args.k, h=args.h, genus=args.genus, punctures=args.punctures, mode=mode,
        exclude_punctured_disks=exclude, count=total, per_graph=per_graph,
    )
    rows: Rows = [[args.k, args.h, args.genus, args.punctures, mode, p.key, p.count] for p in per_graph]
    rows.append([args.k, args.h, args.genus, args.punctures, mode, "total", total])
    return report, rows


def _handle_asymptotic(args: argparse.Namespace, resolve: CensusResolver) -> Tuple[BaseModel, Rows]:
    census = resolve(args.k)
    base = [args.k, "" if args.h is None else args.h, args.genus, args.punctures]

    if args.h is not None:
        value = asymptotic_orbit_count(args.k, args.h, args.genus, args.punctures, census)
        report = AsymptoticReport(
            k=args.k, h=args.h, genus=args.genus, punctures=args.punctures, value=Rational.of(value)
        )
        return report, [base + ["orbit", value.numerator, value.denominator]]

    value = asymptotic_total(args.k, args.genus, args.punctures, census)
    closed = asymptotic_closed(args.k, args.genus, census)
    report = AsymptoticReport(
        k=args.k, genus=args.genus, punctures=args.punctures,
        value=Rational.of(value), closed=Rational.of(closed),
    )
    rows: Rows = [
        base + ["total", value.numerator, value.denominator],
        base + ["closed", closed.numerator, closed.denominator],
    ]
    return report, rows


def _handle_stats(args: argparse.Namespace, resolve: CensusResolver) -> Tuple[BaseModel, Rows]:
    census = resolve(args.k)
    st = orbit_statistics(args.k, args.genus, args.punctures, census)
    report = StatsReport(
        k=st.k,
        genus=st.g,
        punctures=st.n,
        orbits=st.orbits,
        disk_orbits=st.disk_orbits,
        distinct_orbits=st.distinct_orbits,
        disk_fraction=Rational.of(st.disk_fraction),
        distinct_signature_fraction=Rational.of(st.distinct_signature_fraction),
        rigid_fraction=Rational.of(st.rigid_fraction),
    )
    df, sf = st.disk_fraction, st.distinct_signature_fraction
    row = [
        st.k, st.g, st.n, st.orbits, st.disk_orbits, st.distinct_orbits,
        df.numerator, df.denominator, sf.numerator, sf.denominator,
    ]
    return report, [row]


def _handle_geometry(args: argparse.Namespace, resolve: CensusResolver) -> Tuple[BaseModel, Rows]:
    params = HyperbolicParams(length=args.length, c_x=args.c_x, g=args.genus, n=args.punctures)
    result = short_orbit_bound(params, census_for=lambda k: resolve(k, strict=False))
    report = GeometryReport(
        length=params.length,
        c_x=params.c_x,
        genus=params.g,
        punctures=params.n,
        budget=result.budget,
        exponent=result.exponent,
        bound=result.bound,
        per_k=[KCount(k=k, count=c) for k, c in result.per_k],
    )
    base = [params.length, params.c_x, params.g, params.n, result.budget]
    rows: Rows = [base + [k, c] for k, c in result.per_k]
    rows.append(base + ["total", result.bound])
    return report, rows


HANDLERS: Dict[str, Handler] = {
    "census": _handle_census,
    "constants": _handle_constants,
    "count": _handle_count,
    "asymptotic": _handle_asymptotic,
    "stats": _handle_stats,
    "geometry": _handle_geometry,
}


# ---------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------

def _non_negative(raw: str) -> int:
    try:
        v = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {raw!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _positive(raw: str) -> int:
    v = _non_negative(raw)
    if v == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=list(get_args(OutputFormat)), default="json", help="report format")
    common.add_argument("--threads", type=_positive, default=None, help="worker processes for census builds")
    common.add_argument("--census-file", default=None, help="census JSONL file to use instead of building")

    parser = argparse.ArgumentParser(
        prog=TOOL_NAME,
        description="Count mapping-class-group orbits of curves with k self-intersections.",
    )
    parser.add_argument("--version", action="version", version=f"{TOOL_NAME} {TOOL_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", parents=[common], help="enumerate ribbon graphs of curves")
    p.add_argument("--k", type=_non_negative, required=True)
    p.add_argument("--genus", type=_non_negative, default=None, help="only classes of this ribbon genus")
    p.add_argument("--out", default=None, help="also write the census JSONL file here")

    p = sub.add_parser("constants", parents=[common], help="leading constants C_{k,h}")
    p.add_argument("--k", type=_non_negative, required=True)
    p.add_argument("--h", type=_non_negative, default=None)

    p = sub.add_parser("count", parents=[common], help="exact orbit counts")
    p.add_argument("--k", type=_non_negative, required=True)
    p.add_argument("--h", type=_non_negative, default=None)
    p.add_argument("--genus", type=_non_negative, required=True)
    p.add_argument("--punctures", type=_non_negative, required=True)
    p.add_argument("--mode", choices=["iso", "no-disk"], default="iso")
    p.add_argument("--exclude-punctured-disks", action="store_true")
    p.add_argument("--up-to", action="store_true", help="sum over every k' <= k and every h")

    p = sub.add_parser("asymptotic", parents=[common], help="asymptotic orbit counts")
    p.add_argument("--k", type=_non_negative, required=True)
    p.add_argument("--h", type=_non_negative, default=None)
    p.add_argument("--genus", type=_non_negative, required=True)
    p.add_argument("--punctures", type=_non_negative, required=True)

    p = sub.add_parser("stats", parents=[common], help="finite-size orbit statistics")
    p.add_argument("--k", type=_non_negative, required=True)
    p.add_argument("--genus", type=_non_negative, required=True)
    p.add_argument("--punctures", type=_non_negative, required=True)

    p = sub.add_parser("geometry", parents=[common], help="bound on orbits containing short geodesics")
    p.add_argument("--length", type=float, required=True)
    p.add_argument("--c-x", type=float, default=0.0)
    p.add_argument("--genus", type=_non_negative, required=True)
    p.add_argument("--punctures", type=_non_negative, required=True)

    return parser


# ---------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------

def _render(command: str, fmt: OutputFormat, report: BaseModel, rows: Rows) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS[command])
        writer.writerows(rows)
        return buf.getvalue()

    envelope = ReportEnvelope(tool=TOOL_NAME, version=TOOL_VERSION, command=command, result=report.model_dump())
    return envelope.model_dump_json(indent=2) + "\n"


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None) -> int:
    """Parse, dispatch, print the report; returns the process exit status."""
    out = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as e:
        return int(e.code or 0)

    resolve = CensusResolver(args.census_file, args.threads)
    try:
        report, rows = HANDLERS[args.command](args, resolve)
    except BudgetExceeded as e:
        logger.warning("refused %s: %s", args.command, e)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception:
        logger.exception("%s failed", args.command)
        return EXIT_FAILURE

    out.write(_render(args.command, args.format, report, rows))
    return EXIT_OK
