"""Display formatting logic for bench command."""

from typing import List, Optional

from rich.table import Table

from walkforge.sdk import BenchRow


def _seconds(value: Optional[float]) -> str:
    return f"{value:.3f}" if value is not None else "—"


def build_bench_table(rows: List[BenchRow]) -> Table:
    table = Table(title="APAW vs iterated products")
    for header in ("n", "m", "μ", "preprocess s", "apaw s", "naive s", "speedup"):
        table.add_column(header, justify="right")
    for row in rows:
        speedup = row.speedup
        table.add_row(
            str(row.n),
            str(row.m),
            str(row.mu),
            _seconds(row.preprocess_seconds),
            _seconds(row.apaw_seconds),
            _seconds(row.naive_seconds),
            f"{speedup:.1f}×" if speedup is not None else "—",
        )
    return table
