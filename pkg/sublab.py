# sublab.py

"""
Línea de comandos:

    sublab query   --group builtin:A5 --subgroup "(1 2)(3 4), (1 3)(2 4)" --policy kpt --t 2 --witness
    sublab verify  --suite all --t 1,2,3 --report report.txt
    sublab lattice --group builtin:S4 --emit-lattice-dot s4.dot

Códigos de salida: 0 verdadero / todo pasa, 1 falso / hay fallos,
2 error de uso, de formato o de capacidad.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from rich.console import Console
from rich.markup import escape
from rich.table import Table

from config.settings import DEFAULT_JOBS, DEFAULT_T_VALUES, LatticeRunConfig, QueryConfig, VerifyRunConfig
from corpus.corpus import Corpus, load_file_list, standard_corpus
from corpus.recipes import build, recipe_from_source
from groups.permutation import parse_permutation_list
from lattice.subgroups import all_subgroups
from reporting.summary import emit_report, print_failures, print_suite_summary, save_cases_to_csv
from subnormal.policies import parse_policy
from subnormal.search import is_subnormal_variant, serialize
from utils.errors import ArgumentError, SublabError
from utils.log import configure_logging
from validation.base_suite import Report
from validation.registry import parse_suite_ids, run_suite
from visualization.lattice_dot import write_lattice_dot

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_ERROR = 2

console = Console(highlight=False)
err_console = Console(stderr=True, highlight=False)


def parse_t_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise ArgumentError(f"--t expects integers separated by commas, got {text!r}")


# ---------------------------------------------------------------------- #
#  query
# ---------------------------------------------------------------------- #

def run_query(cfg: QueryConfig, out: Console | None = None) -> int:
    out = out or console
    G = build(recipe_from_source(cfg.group_source))
    text = cfg.subgroup_text.strip()
    gens = parse_permutation_list(text, G.degree) if text else []
    H = G.subgroup(gens)
    policy = parse_policy(cfg.policy, cfg.t)

    holds, witness = is_subnormal_variant(G, H, policy)
    out.print("true" if holds else "false", soft_wrap=True)
    if holds and cfg.show_witness:
        chain = serialize(witness)
        if chain:
            out.print(chain, soft_wrap=True, markup=False)
    return EXIT_OK if holds else EXIT_FALSE


# ---------------------------------------------------------------------- #
#  verify
# ---------------------------------------------------------------------- #

def load_corpus(source: str) -> Corpus:
    if source == "standard":
        return standard_corpus()
    return load_file_list(Path(source))


def run_verify(cfg: VerifyRunConfig, out: Console | None = None) -> int:
    out = out or console
    suite_ids = parse_suite_ids(",".join(cfg.suites))
    corpus = load_corpus(cfg.corpus_source)

    reports: list[Report] = []
    for suite_id in suite_ids:
        reports.append(run_suite(suite_id, corpus, cfg.t_values, jobs=cfg.jobs))

    if cfg.report_path is not None:
        emit_report(reports, cfg.report_path)
    if cfg.csv_path is not None:
        save_cases_to_csv(reports, cfg.csv_path)

    print_suite_summary(reports, out)
    print_failures(reports, out)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FALSE


# ---------------------------------------------------------------------- #
#  lattice
# ---------------------------------------------------------------------- #

def run_lattice(cfg: LatticeRunConfig, out: Console | None = None) -> int:
    out = out or console
    G = build(recipe_from_source(cfg.group_source))
    if cfg.dot_path is not None:
        path = write_lattice_dot(G, cfg.dot_path)
        out.print(f"[green]Lattice written to {path}[/green]")
        return EXIT_OK

    lat = all_subgroups(G)
    table = Table(title=f"Subgroups of a group of order {G.order()}", header_style="bold magenta")
    table.add_column("Node", justify="right", style="cyan")
    table.add_column("Order", justify="right")
    table.add_column("Normal", justify="center")
    table.add_column("Covered by")
    table.add_column("Generators")
    for ref in lat:
        covers = sorted(lat.hasse.successors(ref.node_id))
        normal = lat.normal_flags[ref.node_id]
        table.add_row(
            str(ref.node_id),
            str(ref.order),
            "[green]yes[/green]" if normal else "no",
            ",".join(map(str, covers)) or "-",
            ", ".join(g.to_cycle_string() for g in ref.generators) or "()",
        )
    out.print(table)
    return EXIT_OK


# ---------------------------------------------------------------------- #
#  Parser
# ---------------------------------------------------------------------- #

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sublab", description="K-P_t-subnormality workbench")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    q = sub.add_parser("query", help="decide one subnormality variant for one subgroup")
    q.add_argument("--group", required=True, help="builtin:NAME or file:PATH")
    q.add_argument("--subgroup", required=True, help='generators, e.g. "(1 2)(3 4), (1 3)(2 4)"')
    q.add_argument("--policy", required=True, help="subnormal|psub|kpsub|kpt|fsub:UK<k>|kfsub:UK<k>")
    q.add_argument("--t", type=int, default=1)
    q.add_argument("--witness", action="store_true", help="print the chain when the verdict is true")

    v = sub.add_parser("verify", help="run verification suites over a corpus")
    v.add_argument("--suite", default="all", help="suite id, comma list or 'all'")
    v.add_argument("--t", default=",".join(map(str, DEFAULT_T_VALUES)))
    v.add_argument("--corpus", default="standard", help="'standard' or a file listing groups")
    v.add_argument("--report", type=Path, default=None)
    v.add_argument("--csv", type=Path, default=None)
    v.add_argument("--jobs", type=int, default=DEFAULT_JOBS)

    lt = sub.add_parser("lattice", help="show or export the subgroup lattice")
    lt.add_argument("--group", required=True)
    lt.add_argument("--emit-lattice-dot", dest="dot", type=Path, default=None)
    return parser


def dispatch(args: argparse.Namespace) -> int:
    if args.command == "query":
        cfg = QueryConfig(args.group, args.subgroup, args.policy, t=args.t, show_witness=args.witness)
        return run_query(cfg)
    if args.command == "verify":
        cfg = VerifyRunConfig(
            suites=[args.suite],
            t_values=parse_t_list(args.t),
            corpus_source=args.corpus,
            report_path=args.report,
            csv_path=args.csv,
            jobs=args.jobs,
        )
        return run_verify(cfg)
    return run_lattice(LatticeRunConfig(args.group, dot_path=args.dot))


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        return dispatch(args)
    except SublabError as e:
        err_console.print(f"[bold red]Error:[/bold red] {escape(str(e))}", soft_wrap=True)
        return EXIT_ERROR
    except KeyboardInterrupt:
        err_console.print("\n[bold red]Interrupted by user.[/bold red]")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
