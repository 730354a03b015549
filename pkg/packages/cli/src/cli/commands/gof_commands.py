"""CLI commands for calibrating statistics and running goodness-of-fit tests."""

from pathlib import Path

import click
from core.domain.enums import FunctionalStatisticId, StatisticId
from core.domain.value_objects.calibration_request import CalibrationRequest
from core.domain.value_objects.gof_requests import (
    DeviationTestRequest,
    EnvelopeTestRequest,
)
from core.domain.value_objects.window import Window

from ..presentation.styles import (
    Messages,
    calibration_table,
    envelope_summary,
    format_decision,
)
from .common import (
    M_option,
    alpha_option,
    async_command,
    build,
    functional_statistic_spec,
    input_option,
    make_job,
    model_options,
    output_option,
    progress_reporter,
    resolve_alpha,
    resolve_model,
    rf_option,
    scalar_statistic_spec,
    seed_option,
    start_job,
    window_option,
)

SCALAR_STATS = tuple(s.value for s in StatisticId)
FUNCTIONAL_STATS = tuple(s.value for s in FunctionalStatisticId)


@click.command("calibrate")
@model_options
@click.option("--stat", type=click.Choice(SCALAR_STATS), required=True)
@click.option("--r", "r", type=float, default=None, help="Integration bound")
@M_option
@rf_option
@click.option("--n-sims", type=click.IntRange(2), default=2000, show_default=True)
@seed_option
@output_option
@click.pass_context
@async_command
async def calibrate(
    ctx: click.Context,
    model_options: dict,
    stat: str,
    r: float | None,
    M: float | None,
    r_f: float | None,
    n_sims: int,
    seed: int,
    output_path: Path,
) -> None:
    """Estimate the null mean and variance of a scalar statistic."""
    model = resolve_model(ctx.obj, model_options)
    statistic = scalar_statistic_spec(ctx.obj, stat, r, M, r_f)
    request = build(
        CalibrationRequest, model=model, statistic=statistic, n_sims=n_sims, seed=seed
    )
    start_job(
        ctx.obj,
        make_job("calibrate", outputs=[output_path], window=model.window, seed=seed),
    )

    console = ctx.obj.console
    interactor = ctx.obj.container.get_calibrate_interactor()
    with progress_reporter(console, n_sims, "Calibrating") as advance:
        calibration = await interactor.execute(request, advance)

    ctx.obj.container.get_json_store().write(output_path, calibration)
    console.print(calibration_table(calibration))
    if calibration.degenerate:
        console.print(
            Messages.warning("Zero null variance: deviation tests will refuse it")
        )
    console.print(Messages.written(str(output_path), "Calibration"))


@click.command("test-deviation")
@input_option
@click.option(
    "--calib",
    "calibration_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    required=True,
    help="Calibration JSON written by 'calibrate'",
)
@window_option
@alpha_option
@output_option
@click.pass_context
@async_command
async def test_deviation(
    ctx: click.Context,
    input_path: Path,
    calibration_path: Path,
    window: Window | None,
    alpha: float | None,
    output_path: Path,
) -> None:
    """Z-test of a pattern's statistic against a stored calibration."""
    calibration = ctx.obj.container.get_json_store().read_calibration(
        calibration_path
    )
    window = window or calibration.model.window
    start_job(
        ctx.obj,
        make_job(
            "test-deviation",
            inputs=[input_path, calibration_path],
            outputs=[output_path],
            window=window,
            seed=calibration.seed,
        ),
    )

    pattern = ctx.obj.container.get_csv_store().read_pattern(input_path, window)
    request = build(
        DeviationTestRequest,
        pattern=pattern,
        calibration=calibration,
        alpha=resolve_alpha(ctx.obj, alpha),
    )
    report = await ctx.obj.container.get_deviation_test_interactor().execute(request)

    ctx.obj.container.get_json_store().write(output_path, report)
    ctx.obj.console.print(
        f"{report.statistic.id.value} = {report.value:.6g}, z = {report.z:.3f}, "
        f"p = {report.p_value:.4f}: {format_decision(report.reject)}"
    )
    ctx.obj.console.print(Messages.written(str(output_path), "Report"))


@click.command("test-envelope")
@input_option
@model_options
@click.option("--stat", type=click.Choice(FUNCTIONAL_STATS), required=True)
@click.option("--grid", type=click.IntRange(2), default=None, help="Grid points")
@click.option("--r-max", "r_max", type=float, default=None, help="Grid upper end")
@M_option
@rf_option
@click.option("--n-sims", type=click.IntRange(1), default=999, show_default=True)
@alpha_option
@seed_option
@output_option
@click.option(
    "--report",
    "report_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Also write the report JSON",
)
@click.pass_context
@async_command
async def test_envelope(
    ctx: click.Context,
    input_path: Path,
    model_options: dict,
    stat: str,
    grid: int | None,
    r_max: float | None,
    M: float | None,
    r_f: float | None,
    n_sims: int,
    alpha: float | None,
    seed: int,
    output_path: Path,
    report_path: Path | None,
) -> None:
    """Global extreme-rank-length envelope test of a pattern against a model."""
    model = resolve_model(ctx.obj, model_options)
    statistic = functional_statistic_spec(ctx.obj, stat, M, r_f, grid, r_max)
    outputs = [output_path] + ([report_path] if report_path else [])
    start_job(
        ctx.obj,
        make_job(
            "test-envelope",
            inputs=[input_path],
            outputs=outputs,
            window=model.window,
            seed=seed,
        ),
    )

    pattern = ctx.obj.container.get_csv_store().read_pattern(input_path, model.window)
    request = build(
        EnvelopeTestRequest,
        pattern=pattern,
        model=model,
        statistic=statistic,
        n_sims=n_sims,
        alpha=resolve_alpha(ctx.obj, alpha),
        seed=seed,
    )

    console = ctx.obj.console
    interactor = ctx.obj.container.get_envelope_test_interactor()
    with progress_reporter(console, n_sims, "Simulating null curves") as advance:
        report = await interactor.execute(request, advance)

    ctx.obj.container.get_csv_store().write_envelope(output_path, report)
    if report_path is not None:
        ctx.obj.container.get_json_store().write(report_path, report)
    console.print(envelope_summary(report))
    console.print(Messages.written(str(output_path), "Envelope"))
