"""
Main Click-based CLI for tdagof.
"""

import sys
from pathlib import Path

import click
from core import __version__ as core_version
from core.domain.entities.exceptions import TdaGofError
from core.settings import AppSettings
from core.utils.logging import configure_logging
from rich.console import Console

from .commands import (
    calibrate,
    mean_curves,
    oracle,
    pd,
    power,
    power_envelope,
    ripley,
    simulate,
    summary,
    sweep,
    test_deviation,
    test_envelope,
)
from .dependencies.container import CLIContainer
from .exceptions import exit_code_for
from .presentation.styles import Messages


class CliContext:
    def __init__(self) -> None:
        self.console = Console(stderr=True)
        self.container = CLIContainer()
        self.verbose = False


@click.group(invoke_without_command=True)
@click.option("--verbose", "-v", is_flag=True, help="Log progress and show tracebacks")
@click.option("--version", is_flag=True, help="Show version information")
@click.option(
    "--threads",
    type=click.IntRange(1, 512),
    default=None,
    help="Worker processes for replications (overrides TDAGOF_THREADS)",
)
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None,
    help="JSON settings file (default: ./tdagof.json if present)",
)
@click.pass_context
def cli(
    ctx: click.Context,
    verbose: bool,
    version: bool,
    threads: int | None,
    config_path: Path | None,
) -> None:
    """
    tdagof - topological goodness-of-fit tests for planar point patterns.

    Simulate point processes, compute M-bounded persistence diagrams and
    their summaries, calibrate statistics and run deviation and global
    envelope tests. Machine output goes to files or standard output, all
    messages to standard error.

    Examples:
      tdagof simulate --model poisson --intensity 2 --seed 1 --out p.csv
      tdagof pd --in p.csv --window 0,0,10,10 --out d.csv
      tdagof calibrate --stat t-loop --n-sims 2000 --seed 7 --out calib.json
      tdagof test-deviation --in p.csv --calib calib.json --out report.json
    """
    cli_ctx = CliContext()
    cli_ctx.verbose = verbose

    ctx.ensure_object(dict)
    ctx.obj = cli_ctx

    if version:
        click.echo(f"tdagof {core_version}")
        sys.exit(0)

    try:
        if config_path is not None:
            cli_ctx.container.use_settings(AppSettings(config_file=str(config_path)))
        cli_ctx.container.settings.validate_settings()
    except TdaGofError as e:
        cli_ctx.console.print(Messages.error(str(e)))
        sys.exit(exit_code_for(e))

    logging_settings = cli_ctx.container.settings.logging
    if verbose and logging_settings.level not in ("DEBUG", "INFO"):
        logging_settings = logging_settings.model_copy(update={"level": "INFO"})
    configure_logging(logging_settings)

    cli_ctx.container.set_workers(threads)

    if ctx.invoked_subcommand is None:
        cli_ctx.console.print(ctx.get_help(), markup=False, highlight=False)


cli.add_command(simulate)
cli.add_command(pd)
cli.add_command(summary)
cli.add_command(ripley)
cli.add_command(oracle)
cli.add_command(calibrate)
cli.add_command(test_deviation)
cli.add_command(test_envelope)
cli.add_command(mean_curves)
cli.add_command(power)
cli.add_command(power_envelope)
cli.add_command(sweep)


if __name__ == "__main__":
    cli()
