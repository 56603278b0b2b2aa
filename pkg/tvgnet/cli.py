"""
Command Line Interface for tvgnet.

Exit codes: 0 success, 1 usage or configuration error, 2 input or parse
error, 3 internal invariant violation.
"""
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, Tuple

import click
import yaml
from rich.console import Console
from rich.table import Table

from . import __version__
from .analysis.series import metric_series
from .analysis.tracking import track_largest_community
from .core.config import INPUT_FORMATS, WEIGHT_EVENT_TIMES, RunConfig, get_config_template, load_config
from .core.errors import (
    ConfigError,
    EmptyWindowError,
    InputError,
    InvariantViolation,
    TemporalGraphError,
    WindowIndexError,
)
from .core.serialization import dumps_tvg, read_tvg
from .core.snapshots import snapshot_sequence
from .core.tvg import TimeVaryingGraph
from .export.gexf import write_snapshot_gexf
from .export.tables import write_metric_rows, write_track_rows_tidy, write_track_rows_wide
from .ingest.builder import BuildPolicy, CorpusStats, build_interaction_network, corpus_stats, filter_by_strength
from .ingest.parsers import read_corpus
from .utils.file_ops import ensure_directory, write_text_atomic
from .utils.logging import LogContext, PerformanceLogger, get_logger, setup_logging
from .utils.validation import validate_input_path, validate_input_paths, validate_output_dir

logger = get_logger(__name__)

EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_INVARIANT = 3

NETWORK_FILE = "network.tvg"
STATS_FILE = "corpus_stats.yaml"


class TVGNetGroup(click.Group):
    """Command group reporting usage errors with exit code 1."""

    def make_context(self, info_name, args, parent=None, **extra):
        try:
            return super().make_context(info_name, args, parent=parent, **extra)
        except click.UsageError as e:
            e.exit_code = EXIT_USAGE
            raise

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = EXIT_USAGE
            raise


def _fail(message: str, code: int) -> None:
    click.echo(f"❌ {message}", err=True)
    sys.exit(code)


@contextmanager
def _pipeline_errors() -> Iterator[None]:
    """Map library errors to diagnostics and exit codes."""
    try:
        yield
    except ConfigError as e:
        _fail(str(e), EXIT_USAGE)
    except (InputError, EmptyWindowError, WindowIndexError, TemporalGraphError) as e:
        _fail(str(e), EXIT_INPUT)
    except OSError as e:
        _fail(f"I/O error: {e}", EXIT_INPUT)
    except InvariantViolation as e:
        logger.exception("Internal invariant violated")
        _fail(f"internal invariant violated: {e}", EXIT_INVARIANT)


def _load_run_config(ctx: click.Context, config_path: Optional[str], overrides: Dict[str, Any]) -> RunConfig:
    """Load the effective configuration and set up logging from it."""
    config = load_config(config_path, overrides)
    obj = ctx.find_root().obj or {}
    setup_logging(
        level=config.log_level,
        verbose=obj.get("verbose", False),
        log_file=obj.get("log_file") or config.log_file,
    )
    logger.debug(f"Effective configuration: {config!r}")
    return config


def _corpus_paths(config: RunConfig) -> List[Path]:
    if not config.inputs:
        raise ConfigError("no input file given (use --input or the inputs setting)")
    return validate_input_paths(config.inputs)


def _read_network(config: RunConfig) -> TimeVaryingGraph:
    if len(config.inputs) != 1:
        raise ConfigError(f"expected exactly one network file, got {len(config.inputs)}")
    return read_tvg(validate_input_path(config.inputs[0]))


def _apply_threshold(g: TimeVaryingGraph, threshold: int) -> TimeVaryingGraph:
    if threshold <= 0:
        return g
    return filter_by_strength(g, threshold, g.lifetime.end - 1)


def _output_dir(config: RunConfig) -> Path:
    return ensure_directory(validate_output_dir(config.out_dir))


def _cumulative(value: Optional[str]) -> Optional[bool]:
    return None if value is None else value == "true"


# Shared options

def _config_option(f):
    return click.option('--config', 'config_path', type=click.Path(),
                        help='Configuration file (YAML or key=value)')(f)


def _out_option(f):
    return click.option('--out', 'out_dir', type=click.Path(file_okay=False),
                        help='Output directory')(f)


def _input_option(f):
    return click.option('--input', 'inputs', multiple=True, type=click.Path(),
                        help='Input file (repeatable)')(f)


def _snapshot_options(f):
    f = click.option('--cumulative', type=click.Choice(['true', 'false']),
                     help='Cumulative footprints from the lifetime start')(f)
    f = click.option('--step', type=int, help='Window length in days')(f)
    f = click.option('--threshold', type=int,
                     help='Keep links with strength strictly above N')(f)
    return f


@click.group(cls=TVGNetGroup, invoke_without_command=True)
@click.option('--version', is_flag=True, help='Show version information')
@click.option('--verbose', '-v', is_flag=True, help='Enable verbose output')
@click.option('--log-file', type=click.Path(dir_okay=False), help='Write a JSON log file')
@click.pass_context
def cli(ctx, version: bool, verbose: bool, log_file: Optional[str]):
    """tvgnet - time-varying graph analytics for co-authorship citation networks."""
    if version:
        click.echo(f"tvgnet version {__version__}")
        ctx.exit(0)

    ctx.obj = {"verbose": verbose, "log_file": log_file}
    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


@cli.command()
@_input_option
@click.option('--format', 'input_format', type=click.Choice(INPUT_FORMATS),
              help='Corpus format (snap: citations file, then metadata file)')
@click.option('--count-self-citations/--no-count-self-citations', default=None,
              help='Count citations between papers sharing an author')
@click.option('--weight-time', 'weight_event_time', type=click.Choice(WEIGHT_EVENT_TIMES),
              help='Date of a citation weight event')
@_out_option
@_config_option
@click.pass_context
def ingest(ctx, inputs: Tuple[str, ...], input_format: Optional[str],
           count_self_citations: Optional[bool], weight_event_time: Optional[str],
           out_dir: Optional[str], config_path: Optional[str]):
    """Parse a corpus and build the interaction network."""
    with _pipeline_errors():
        config = _load_run_config(ctx, config_path, {
            "inputs": list(inputs) or None,
            "input_format": input_format,
            "count_self_citations": count_self_citations,
            "weight_event_time": weight_event_time,
            "out_dir": out_dir,
        })
        perf = PerformanceLogger(logger)
        with LogContext(logger, command="ingest"):
            paths = _corpus_paths(config)
            with perf.time_operation("parse"):
                corpus = read_corpus(paths, config.input_format)
            policy = BuildPolicy(config.count_self_citations, config.weight_event_time)
            with perf.time_operation("build"):
                g = build_interaction_network(corpus, policy)
            stats = corpus_stats(corpus)

            out = _output_dir(config)
            write_text_atomic(out / NETWORK_FILE, dumps_tvg(g))
            write_text_atomic(out / STATS_FILE, _stats_yaml(stats))

    click.echo(f"✅ {g.number_of_nodes()} authors, {g.number_of_edges()} links "
               f"from {stats.papers} papers -> {out / NETWORK_FILE}")


@cli.command()
@_input_option
@_snapshot_options
@click.option('--resolution', type=float, help='Louvain resolution')
@click.option('--weighted-modularity/--unweighted-modularity', default=None,
              help='Use link strengths in modularity')
@click.option('--workers', type=int, help='Windows evaluated in parallel')
@_out_option
@_config_option
@click.pass_context
def metrics(ctx, inputs: Tuple[str, ...], threshold: Optional[int], step: Optional[int],
            cumulative: Optional[str], resolution: Optional[float],
            weighted_modularity: Optional[bool], workers: Optional[int],
            out_dir: Optional[str], config_path: Optional[str]):
    """Compute the indicator series of a network."""
    with _pipeline_errors():
        config = _load_run_config(ctx, config_path, {
            "inputs": list(inputs) or None,
            "threshold": threshold,
            "step": step,
            "cumulative": _cumulative(cumulative),
            "resolution": resolution,
            "weighted_modularity": weighted_modularity,
            "workers": workers,
            "out_dir": out_dir,
        })
        perf = PerformanceLogger(logger)
        with LogContext(logger, command="metrics"):
            g = _read_network(config)
            out = _output_dir(config)

            def series(graph: TimeVaryingGraph):
                return metric_series(graph, step=config.step, resolution=config.resolution,
                                     cumulative=config.cumulative,
                                     weighted=config.weighted_modularity, workers=config.workers)

            with perf.time_operation("metric_series"):
                rows = series(_apply_threshold(g, config.threshold))
            write_metric_rows(rows, out / "metrics.csv")
            if config.threshold > 0:
                write_metric_rows(series(g), out / "metrics_all.csv")

    click.echo(f"✅ {len(rows)} windows -> {out / 'metrics.csv'}")


@cli.command()
@_input_option
@_snapshot_options
@click.option('--resolution', type=float, help='Louvain resolution')
@click.option('--anchor', type=int, help='Index of the first tracked window')
@click.option('--frozen/--redetect', 'frozen_tracking', default=None,
              help='Re-measure the anchor community instead of re-detecting it')
@click.option('--weighted-modularity/--unweighted-modularity', default=None,
              help='Use link strengths in modularity')
@click.option('--workers', type=int, help='Windows partitioned in parallel')
@_out_option
@_config_option
@click.pass_context
def communities(ctx, inputs: Tuple[str, ...], threshold: Optional[int], step: Optional[int],
                cumulative: Optional[str], resolution: Optional[float], anchor: Optional[int],
                frozen_tracking: Optional[bool], weighted_modularity: Optional[bool],
                workers: Optional[int], out_dir: Optional[str], config_path: Optional[str]):
    """Track the largest community across windows."""
    with _pipeline_errors():
        config = _load_run_config(ctx, config_path, {
            "inputs": list(inputs) or None,
            "threshold": threshold,
            "community_step": step,
            "cumulative": _cumulative(cumulative),
            "resolution": resolution,
            "anchor": anchor,
            "frozen_tracking": frozen_tracking,
            "weighted_modularity": weighted_modularity,
            "workers": workers,
            "out_dir": out_dir,
        })
        perf = PerformanceLogger(logger)
        with LogContext(logger, command="communities"):
            g = _apply_threshold(_read_network(config), config.threshold)
            out = _output_dir(config)
            with perf.time_operation("tracking"):
                rows = track_largest_community(
                    g, step=config.community_step, anchor=config.anchor,
                    resolution=config.resolution, cumulative=config.cumulative,
                    weighted=config.weighted_modularity, frozen=config.frozen_tracking,
                    workers=config.workers)
            write_track_rows_wide(rows, out / "communities_table.csv")
            write_track_rows_tidy(rows, out / "communities_tidy.csv")

    click.echo(f"✅ Tracked {len(rows)} windows -> {out / 'communities_table.csv'}")


@cli.command('export-gexf')
@_input_option
@_snapshot_options
@click.option('--window', type=int, help='Window index (all windows if omitted)')
@_out_option
@_config_option
@click.pass_context
def export_gexf(ctx, inputs: Tuple[str, ...], threshold: Optional[int], step: Optional[int],
                cumulative: Optional[str], window: Optional[int],
                out_dir: Optional[str], config_path: Optional[str]):
    """Write snapshots as GEXF files."""
    with _pipeline_errors():
        config = _load_run_config(ctx, config_path, {
            "inputs": list(inputs) or None,
            "threshold": threshold,
            "step": step,
            "cumulative": _cumulative(cumulative),
            "out_dir": out_dir,
        })
        with LogContext(logger, command="export-gexf"):
            g = _apply_threshold(_read_network(config), config.threshold)
            snapshots = snapshot_sequence(g, step=config.step, cumulative=config.cumulative)
            if window is None:
                selected = list(range(len(snapshots)))
            elif 0 <= window < len(snapshots):
                selected = [window]
            else:
                raise WindowIndexError(f"window {window} is outside the {len(snapshots)} windows")

            out = _output_dir(config)
            written: List[Path] = []
            for index in selected:
                snapshot = snapshots[index]
                description = f"window {index}: {snapshot.window}"
                written.append(write_snapshot_gexf(snapshot, out / f"snapshot_{index}.gexf", description))

    click.echo(f"✅ Wrote {len(written)} GEXF file(s) to {out}")


@cli.command()
@_input_option
@click.option('--format', 'input_format', type=click.Choice(INPUT_FORMATS),
              help='Corpus format (snap: citations file, then metadata file)')
@_out_option
@_config_option
@click.pass_context
def stats(ctx, inputs: Tuple[str, ...], input_format: Optional[str],
          out_dir: Optional[str], config_path: Optional[str]):
    """Show corpus statistics."""
    with _pipeline_errors():
        config = _load_run_config(ctx, config_path, {
            "inputs": list(inputs) or None,
            "input_format": input_format,
            "out_dir": out_dir,
        })
        corpus = read_corpus(_corpus_paths(config), config.input_format)
        result = corpus_stats(corpus)
        if out_dir is not None:
            write_text_atomic(_output_dir(config) / STATS_FILE, _stats_yaml(result))

    table = Table(title="Corpus statistics")
    table.add_column("Measure")
    table.add_column("Value", justify="right")
    for key, value in result.to_dict().items():
        table.add_row(key, str(value))
    Console().print(table)


@cli.command('config')
@click.option('--show', is_flag=True, help='Show the effective configuration')
@click.option('--init', 'init_path', type=click.Path(dir_okay=False),
              help='Write a configuration template to PATH')
@_config_option
@click.pass_context
def config_command(ctx, show: bool, init_path: Optional[str], config_path: Optional[str]):
    """Show or initialize run configuration."""
    if init_path:
        path = Path(init_path)
        if path.exists() and not click.confirm(f"Configuration file exists at {path}. Overwrite?"):
            return
        try:
            write_text_atomic(path, get_config_template())
        except OSError as e:
            _fail(f"Failed to create configuration: {e}", EXIT_INPUT)
        click.echo(f"✅ Created configuration template at {path}")
    elif show:
        with _pipeline_errors():
            config = load_config(config_path)
        click.echo(config.to_yaml(), nl=False)
    else:
        click.echo("Use one of: --show or --init PATH")


def _stats_yaml(result: CorpusStats) -> str:
    return yaml.safe_dump(result.to_dict(), default_flow_style=False, sort_keys=True)


# Main entry point
def main():
    """Main entry point for the CLI."""
    try:
        cli()
    except KeyboardInterrupt:
        click.echo("\n⚠️ Interrupted by user", err=True)
        sys.exit(130)


if __name__ == '__main__':
    main()
