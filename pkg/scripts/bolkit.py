"""bolkit command-line frontend.

Data goes to stdout (or --out/--tsv files); diagnostics go to the logger
on stderr. Exit codes: 0 ok, 1 budget exhausted (partial output marked),
2 input or usage error, 3 a selftest check failed.
"""

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Optional

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.catalog import (
    CatalogStore,
    analyze_all,
    census_summary,
    enumerate_right_bol,
    format_block,
    format_loops,
    histogram_frame,
    in_nu_population,
    nu_histogram,
    read_loops,
    records_to_frame,
    run_selftest,
    write_loops,
    write_tables,
    write_tsv,
)
from src.catalog.enumeration import Census
from src.config import settings
from src.exceptions import (
    BolkitError,
    BudgetError,
    BudgetExceeded,
    CentralSquaresLost,
    SearchBudgetExceeded,
)
from src.extension import chein, extend, iterate_extension
from src.loopcore import Identity, Loop, check_identity
from src.nets import gamma_group, reflection_line_maps, sigma_set
from src.permgrp import Permutation
from src.quandle import core, rstr_order
from src.utils import get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_BUDGET = 1
EXIT_INPUT = 2
EXIT_CHECK_FAILED = 3


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if text and not text.endswith("\n"):
        sys.stdout.write("\n")


def _label(loop: Loop, i: int) -> str:
    return loop.name or f"loop{i + 1}"


def _cycles(perm: Permutation) -> str:
    if perm.is_identity():
        return "()"
    return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in perm.cycles())


def _load(path: Path) -> list[Loop]:
    if not path.is_file():
        raise FileNotFoundError(f"File not found: {path}")
    return read_loops(path)


def _output_loops(loops: Sequence[Loop], out: Optional[Path]) -> None:
    if out:
        write_loops(out, loops)
        logger.info(f"Wrote {len(loops)} loops to {out}")
    else:
        _emit(format_loops(loops))


# Subcommands


def cmd_check(args: argparse.Namespace) -> int:
    identity = Identity(args.identity)
    for i, loop in enumerate(_load(args.file)):
        result = check_identity(loop, identity)
        line = f"{_label(loop, i)}\t{identity.value}\t{'true' if result.holds else 'false'}"
        if result.reason:
            line += f"\t{result.reason}"
        _emit(line)
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    loops = _load(args.file)
    records = analyze_all(loops)
    _emit(records_to_frame(records).to_string(index=False))
    if args.tsv:
        write_tsv(records, args.tsv)
    if args.db:
        store = CatalogStore(args.db)
        store.create_tables()
        stats = store.save_records(zip(loops, records))
        logger.info(f"Stored records: {stats}")
    return EXIT_OK


def cmd_extend(args: argparse.Namespace) -> int:
    results = []
    for loop in _load(args.file):
        if args.iterate == 1:
            results.append(extend(loop).carrier)
            continue
        try:
            results.append(iterate_extension(loop, args.iterate)[-1])
        except CentralSquaresLost as exc:
            logger.error(f"{loop.name}: {exc}")
            if exc.loops:
                results.append(exc.loops[-1])
            _output_loops(results, args.out)
            return EXIT_INPUT
    _output_loops(results, args.out)
    return EXIT_OK


def cmd_chein(args: argparse.Namespace) -> int:
    _output_loops([chein(group) for group in _load(args.file)], args.out)
    return EXIT_OK


def cmd_core(args: argparse.Namespace) -> int:
    quandles = [(f"core({_label(loop, i)})", core(loop).table) for i, loop in enumerate(_load(args.file))]
    if args.out:
        write_tables(args.out, "quandle", quandles)
    else:
        _emit("\n".join(format_block("quandle", name, table) for name, table in quandles))
    return EXIT_OK


def cmd_rstr(args: argparse.Namespace) -> int:
    status = EXIT_OK
    for i, loop in enumerate(_load(args.file)):
        name = _label(loop, i)
        try:
            _emit(f"{name}\t{rstr_order(core(loop), args.max_cosets)}")
        except BudgetExceeded as exc:
            _emit(f"{name}\tincomplete\t{exc.table.defined} cosets defined")
            status = EXIT_BUDGET
    return status


def cmd_net(args: argparse.Namespace) -> int:
    for i, loop in enumerate(_load(args.file)):
        name = _label(loop, i)
        if args.gamma_order:
            _emit(f"{name}\t{gamma_group(loop).order()}")
            continue
        perms = sigma_set(loop) if args.sigma else reflection_line_maps(loop)
        _emit(f"loop {name}")
        for j, perm in enumerate(perms):
            _emit(f"{j + 1}\t{_cycles(perm)}")
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    try:
        census = enumerate_right_bol(
            args.order,
            nonassociative_only=args.nonassoc,
            central_squares_only=args.central_squares,
            node_budget=args.node_budget,
            jobs=args.jobs,
            value_order="descending" if args.descending else "ascending",
        )
    except SearchBudgetExceeded as exc:
        partial: Census = exc.partial
        _emit(f"# incomplete: node budget exhausted, {len(partial.loops)} loops found")
        _output_loops(partial.loops, args.out)
        return EXIT_BUDGET
    _output_loops(census.loops, args.out)
    return EXIT_OK


def cmd_histogram(args: argparse.Namespace) -> int:
    loops = _load(args.file)
    summary = census_summary(loops)
    population = [loop for loop in loops if in_nu_population(loop)]
    _emit(f"# loops {summary.total}")
    _emit(f"# central squares {summary.central_squares}")
    _emit(f"# nonassociative non-AIP with central squares {summary.nu_population}")
    _emit(histogram_frame(nu_histogram(population)).to_csv(sep="\t", index=False, lineterminator="\n"))
    return EXIT_OK


def cmd_selftest(args: argparse.Namespace) -> int:
    results = run_selftest(include_enumerated=not args.skip_enumeration)
    for result in results:
        line = f"{'ok' if result.ok else 'FAIL'}\t{result.name}"
        _emit(line + (f"\t{result.detail}" if result.detail else ""))
    return EXIT_OK if all(r.ok for r in results) else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="bolkit", description="Finite loop toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("check", help="Check an identity on every loop in a file")
    p.add_argument("file", type=Path)
    p.add_argument("--identity", required=True, choices=[i.value for i in Identity])
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("analyze", help="Structural summary of every loop in a file")
    p.add_argument("file", type=Path)
    p.add_argument("--tsv", type=Path, help="Write the records as TSV")
    p.add_argument("--db", help="Store the records in this database URL")
    p.set_defaults(handler=cmd_analyze)

    p = sub.add_parser("extend", help="Index-2 extension of every loop")
    p.add_argument("file", type=Path)
    p.add_argument("--out", type=Path)
    p.add_argument("--iterate", type=int, default=1, help="Number of extension steps")
    p.set_defaults(handler=cmd_extend)

    p = sub.add_parser("chein", help="Chein loop M(G,2) of every group")
    p.add_argument("file", type=Path)
    p.add_argument("--out", type=Path, required=True)
    p.set_defaults(handler=cmd_chein)

    p = sub.add_parser("core", help="Core quandle of every loop")
    p.add_argument("file", type=Path)
    p.add_argument("--out", type=Path)
    p.set_defaults(handler=cmd_core)

    p = sub.add_parser("rstr", help="Order of the restricted structure group of each core")
    p.add_argument("file", type=Path)
    p.add_argument("--max-cosets", type=int, default=None)
    p.set_defaults(handler=cmd_rstr)

    p = sub.add_parser("net", help="Reflections of the 3-net as line permutations")
    p.add_argument("file", type=Path)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--reflections", action="store_true")
    mode.add_argument("--sigma", action="store_true")
    mode.add_argument("--gamma-order", action="store_true")
    p.set_defaults(handler=cmd_net)

    p = sub.add_parser("enumerate", help="Right Bol loops of a given order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--nonassoc", action="store_true")
    p.add_argument("--central-squares", action="store_true")
    p.add_argument("--out", type=Path)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--node-budget", type=int, default=None)
    p.add_argument("--descending", action="store_true", help="Branch on values in descending order")
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("histogram", help="Vertical left nucleus histogram of a catalog")
    p.add_argument("file", type=Path)
    p.set_defaults(handler=cmd_histogram)

    p = sub.add_parser("selftest", help="Check structural invariants on built-in loops")
    p.add_argument("--skip-enumeration", action="store_true")
    p.set_defaults(handler=cmd_selftest)
    return parser


def _validate(args: argparse.Namespace) -> None:
    for key in ("max_cosets", "node_budget", "jobs", "iterate", "order"):
        value = getattr(args, key, None)
        if value is not None and value <= 0:
            raise _UsageError(f"--{key.replace('_', '-')} must be positive")
    out = getattr(args, "out", None)
    if out is not None and out.exists() and out.is_dir():
        raise _UsageError(f"--out {out} is a directory")


def run(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        _validate(args)
    except _UsageError as exc:
        sys.stderr.write(f"bolkit: {exc}\n")
        return EXIT_INPUT
    logger.debug(f"Running {args.command} with budget override {settings.budget}")
    try:
        return int(args.handler(args))
    except BudgetError as exc:
        logger.error(f"Budget exhausted: {exc}")
        return EXIT_BUDGET
    except (BolkitError, OSError, ValueError) as exc:
        logger.error(f"{type(exc).__name__}: {exc}")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
