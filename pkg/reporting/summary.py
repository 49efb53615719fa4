# reporting/summary.py

from __future__ import annotations

import logging
from pathlib import Path
from typing import Iterable

import pandas as pd
from rich.console import Console
from rich.table import Table

from utils.errors import ReportWriteError
from validation.base_suite import Outcome, Report

logger = logging.getLogger(__name__)


def report_text(reports: Iterable[Report]) -> str:
    """Texto determinista: una sección por suite, casos ordenados, sin tiempos."""
    lines: list[str] = []
    for report in reports:
        lines.extend(report.lines())
    return "\n".join(lines) + "\n"


def emit_report(report: Report | Iterable[Report], path: str | Path) -> Path:
    """
    Guarda el informe línea a línea. Dos ejecuciones con el mismo corpus y
    las mismas suites producen ficheros idénticos byte a byte.
    """
    reports = [report] if isinstance(report, Report) else list(report)
    path = Path(path)
    try:
        path.write_text(report_text(reports), encoding="utf-8")
    except OSError as e:
        raise ReportWriteError(path, e.strerror or str(e))
    logger.info("Report written to %s", path)
    return path


def print_suite_summary(reports: Iterable[Report], console: Console | None = None) -> None:
    """
    Muestra por consola una tabla con los totales de cada suite.
    """
    console = console or Console()
    table = Table(title="Verification summary")
    table.add_column("Suite", style="cyan")
    table.add_column("Pass", justify="right", style="green")
    table.add_column("Fail", justify="right", style="red")
    table.add_column("Skip", justify="right", style="yellow")
    table.add_column("Time (s)", justify="right")

    for r in reports:
        table.add_row(r.suite.value, str(r.passed), str(r.failed), str(r.skipped), f"{r.wall_time:.1f}")
    console.print(table)


def print_failures(reports: Iterable[Report], console: Console | None = None, limit: int = 20) -> None:
    console = console or Console()
    failures = [(r.suite, c) for r in reports for c in r.cases if c.outcome is Outcome.FAIL]
    if not failures:
        return
    console.print(f"[bold red]{len(failures)} failing case(s)[/bold red]")
    for suite, case in failures[:limit]:
        console.print(f"  {suite.value}: {case.to_line()}")


def cases_to_dataframe(reports: Iterable[Report]) -> pd.DataFrame:
    """
    Convierte los casos de todas las suites en un DataFrame para inspección/export.
    """
    rows = []
    for r in reports:
        for c in r.cases:
            rows.append(
                {
                    "suite": r.suite.value,
                    "group": c.group,
                    "t": c.t,
                    "check": c.check,
                    "outcome": c.outcome.value,
                    "detail": c.detail,
                }
            )
    columns = ["suite", "group", "t", "check", "outcome", "detail"]
    df_cases = pd.DataFrame(rows, columns=columns)
    df_cases["t"] = df_cases["t"].astype("Int64")
    return df_cases


def outcome_counts(reports: Iterable[Report]) -> pd.DataFrame:
    """Pass/fail/skip per suite and check."""
    df_cases = cases_to_dataframe(reports)
    if df_cases.empty:
        return df_cases
    return (
        df_cases.groupby(["suite", "check", "outcome"]).size()
        .unstack(fill_value=0)
        .reset_index()
    )


def save_cases_to_csv(reports: Iterable[Report], file_path: str | Path) -> Path:
    """
    Guarda los casos en un CSV para análisis posterior.
    """
    file_path = Path(file_path)
    df_cases = cases_to_dataframe(reports)
    try:
        df_cases.to_csv(file_path, index=False)
    except OSError as e:
        raise ReportWriteError(file_path, e.strerror or str(e))
    logger.info("Cases saved to %s", file_path)
    return file_path
