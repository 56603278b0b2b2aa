#!/usr/bin/env python3
"""
hep_th_integration.py

Check corpus sizes and the filtered network of the hep-th citation corpus
against their published values.

Usage:
    python scripts/hep_th_integration.py DATA_DIR [--threshold 150]

DATA_DIR holds ``citations.txt`` and ``metadata.txt``; see docs/formats.md.
"""
import sys
from pathlib import Path

import click
from rich.console import Console
from rich.table import Table

from tvgnet.ingest import build_interaction_network, corpus_stats, filter_by_strength, read_corpus
from tvgnet.utils.logging import PerformanceLogger, get_logger, setup_logging

logger = get_logger("hep_th_integration")

PUBLISHED = {
    "papers": 29555,
    "authors": 59439,
    "citations_total": 352807,
    "filtered_nodes": 12583,
    "filtered_edges": 84512,
}


@click.command()
@click.argument('data_dir', type=click.Path(exists=True, file_okay=False))
@click.option('--threshold', default=150, show_default=True, help='Strength threshold')
@click.option('--verbose', '-v', is_flag=True, help='Enable verbose output')
def main(data_dir: str, threshold: int, verbose: bool):
    """Run the hep-th integration check."""
    setup_logging(verbose=verbose)
    perf = PerformanceLogger(logger)
    directory = Path(data_dir)

    with perf.time_operation("parse"):
        corpus = read_corpus([directory / "citations.txt", directory / "metadata.txt"], "snap")
    stats = corpus_stats(corpus)
    with perf.time_operation("build"):
        g = build_interaction_network(corpus)
    filtered = filter_by_strength(g, threshold, g.lifetime.end - 1)

    measured = {
        "papers": stats.papers,
        "authors": stats.authors,
        "citations_total": stats.citations_total,
        "filtered_nodes": filtered.number_of_nodes(),
        "filtered_edges": filtered.number_of_edges(),
    }

    table = Table(title=f"hep-th (threshold {threshold})")
    table.add_column("Measure")
    table.add_column("Published", justify="right")
    table.add_column("Measured", justify="right")
    table.add_column("")
    mismatches = 0
    for key, expected in PUBLISHED.items():
        # Published filtered sizes only hold for the default threshold.
        check = threshold == 150 or not key.startswith("filtered")
        ok = measured[key] == expected
        mismatches += check and not ok
        table.add_row(key, str(expected), str(measured[key]), ("✅" if ok else "❌") if check else "-")
    Console().print(table)
    sys.exit(1 if mismatches else 0)


if __name__ == '__main__':
    main()
