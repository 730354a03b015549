"""CLI commands for multi-replication studies: mean curves, power and sweeps."""

from pathlib import Path

import click
from core.domain.enums import FunctionalStatisticId, StatisticId
from core.domain.value_objects.study_requests import (
    EnvelopeRejectionRequest,
    MeanCurvesRequest,
    RejectionRateRequest,
    SweepRequest,
)

from ..presentation.styles import Messages, rejection_table, test_reports_table
from .common import (
    M_option,
    alpha_option,
    async_command,
    build,
    functional_statistic_spec,
    input_option,
    make_job,
    model_options,
    null_model_for,
    output_option,
    progress_reporter,
    resolve_alpha,
    resolve_model,
    rf_option,
    seed_option,
    start_job,
)

FUNCTIONAL_STATS = tuple(s.value for s in FunctionalStatisticId)
SWEEP_STATS = (StatisticId.T_CLUSTER.value, StatisticId.T_LOOP.value)

null_model_option = click.option(
    "--null-model",
    "null_model_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None,
    help="Null model JSON (default: Poisson with the default intensity)",
)


@click.command("mean-curves")
@model_options
@click.option("--stat", type=click.Choice(FUNCTIONAL_STATS), required=True)
@click.option("--grid", type=click.IntRange(2), default=None, help="Grid points")
@click.option("--r-max", "r_max", type=float, default=None, help="Grid upper end")
@M_option
@rf_option
@click.option("--n-sims", type=click.IntRange(2), default=500, show_default=True)
@seed_option
@output_option
@click.pass_context
@async_command
async def mean_curves(
    ctx: click.Context,
    model_options: dict,
    stat: str,
    grid: int | None,
    r_max: float | None,
    M: float | None,
    r_f: float | None,
    n_sims: int,
    seed: int,
    output_path: Path,
) -> None:
    """Pointwise mean and standard deviation of a curve under a model."""
    model = resolve_model(ctx.obj, model_options)
    statistic = functional_statistic_spec(ctx.obj, stat, M, r_f, grid, r_max)
    request = build(
        MeanCurvesRequest, model=model, statistic=statistic, n_sims=n_sims, seed=seed
    )
    start_job(
        ctx.obj,
        make_job("mean-curves", outputs=[output_path], window=model.window, seed=seed),
    )

    interactor = ctx.obj.container.get_mean_curves_interactor()
    with progress_reporter(ctx.obj.console, n_sims, "Simulating") as advance:
        curve = await interactor.execute(request, advance)

    ctx.obj.container.get_csv_store().write_mean_curve(output_path, curve)
    ctx.obj.console.print(
        Messages.written(str(output_path), f"Mean {stat} curve of {model.label}")
    )


@click.command("power")
@model_options
@click.option(
    "--calib",
    "calibration_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    required=True,
    help="Null calibration JSON",
)
@click.option("--n-reps", type=click.IntRange(1), default=500, show_default=True)
@alpha_option
@seed_option
@output_option
@click.pass_context
@async_command
async def power(
    ctx: click.Context,
    model_options: dict,
    calibration_path: Path,
    n_reps: int,
    alpha: float | None,
    seed: int,
    output_path: Path,
) -> None:
    """Rejection rate of the deviation test on patterns drawn from a model.

    Drawing from the calibration's own model estimates the test's size.
    """
    calibration = ctx.obj.container.get_json_store().read_calibration(
        calibration_path
    )
    if model_options["window"] is None:
        model_options = {**model_options, "window": calibration.model.window}
    model = resolve_model(ctx.obj, model_options)
    request = build(
        RejectionRateRequest,
        model=model,
        calibration=calibration,
        alpha=resolve_alpha(ctx.obj, alpha),
        n_reps=n_reps,
        seed=seed,
    )
    start_job(
        ctx.obj,
        make_job(
            "power",
            inputs=[calibration_path],
            outputs=[output_path],
            window=model.window,
            seed=seed,
        ),
    )

    interactor = ctx.obj.container.get_rejection_rate_interactor()
    with progress_reporter(ctx.obj.console, n_reps, "Testing") as advance:
        summary = await interactor.execute(request, advance)

    ctx.obj.container.get_json_store().write(output_path, summary)
    ctx.obj.console.print(rejection_table(summary))
    ctx.obj.console.print(Messages.written(str(output_path), "Rejection summary"))


@click.command("power-envelope")
@model_options
@null_model_option
@click.option("--stat", type=click.Choice(FUNCTIONAL_STATS), required=True)
@click.option("--grid", type=click.IntRange(2), default=None, help="Grid points")
@click.option("--r-max", "r_max", type=float, default=None, help="Grid upper end")
@M_option
@rf_option
@click.option("--n-sims", type=click.IntRange(1), default=999, show_default=True)
@click.option("--n-reps", type=click.IntRange(1), default=200, show_default=True)
@alpha_option
@seed_option
@output_option
@click.pass_context
@async_command
async def power_envelope(
    ctx: click.Context,
    model_options: dict,
    null_model_path: Path | None,
    stat: str,
    grid: int | None,
    r_max: float | None,
    M: float | None,
    r_f: float | None,
    n_sims: int,
    n_reps: int,
    alpha: float | None,
    seed: int,
    output_path: Path,
) -> None:
    """Rejection rate of the global envelope test on patterns from a model."""
    model = resolve_model(ctx.obj, model_options)
    null_model = null_model_for(ctx.obj, null_model_path, model.window)
    statistic = functional_statistic_spec(ctx.obj, stat, M, r_f, grid, r_max)
    request = build(
        EnvelopeRejectionRequest,
        model=model,
        null_model=null_model,
        statistic=statistic,
        n_sims=n_sims,
        alpha=resolve_alpha(ctx.obj, alpha),
        n_reps=n_reps,
        seed=seed,
    )
    inputs = [null_model_path] if null_model_path else []
    start_job(
        ctx.obj,
        make_job(
            "power-envelope",
            inputs=inputs,
            outputs=[output_path],
            window=model.window,
            seed=seed,
        ),
    )

    interactor = ctx.obj.container.get_envelope_rejection_interactor()
    with progress_reporter(
        ctx.obj.console, n_sims + n_reps, "Simulating and testing"
    ) as advance:
        summary = await interactor.execute(request, advance)

    ctx.obj.container.get_json_store().write(output_path, summary)
    ctx.obj.console.print(rejection_table(summary))
    ctx.obj.console.print(Messages.written(str(output_path), "Rejection summary"))


@click.command("sweep")
@input_option
@model_options
@click.option("--stat", type=click.Choice(SWEEP_STATS), required=True)
@click.option(
    "--r", "r_values", type=float, multiple=True, required=True, help="Bound to try"
)
@M_option
@rf_option
@click.option("--n-sims", type=click.IntRange(2), default=2000, show_default=True)
@alpha_option
@seed_option
@output_option
@click.pass_context
@async_command
async def sweep(
    ctx: click.Context,
    input_path: Path,
    model_options: dict,
    stat: str,
    r_values: tuple[float, ...],
    M: float | None,
    r_f: float | None,
    n_sims: int,
    alpha: float | None,
    seed: int,
    output_path: Path,
) -> None:
    """Deviation-test p-values of a pattern for several integration bounds."""
    defaults = ctx.obj.container.settings.defaults
    model = resolve_model(ctx.obj, model_options)
    start_job(
        ctx.obj,
        make_job(
            "sweep",
            inputs=[input_path],
            outputs=[output_path],
            window=model.window,
            seed=seed,
        ),
    )

    pattern = ctx.obj.container.get_csv_store().read_pattern(input_path, model.window)
    request = build(
        SweepRequest,
        pattern=pattern,
        model=model,
        statistic=stat,
        r_values=list(r_values),
        M=M if M is not None else defaults.M,
        r_f=r_f if r_f is not None else defaults.r_final,
        n_sims=n_sims,
        alpha=resolve_alpha(ctx.obj, alpha),
        seed=seed,
    )

    interactor = ctx.obj.container.get_sweep_interactor()
    with progress_reporter(ctx.obj.console, n_sims, "Calibrating") as advance:
        reports = await interactor.execute(request, advance)

    ctx.obj.container.get_csv_store().write_sweep(output_path, reports)
    ctx.obj.console.print(test_reports_table(reports, f"{stat} across bounds"))
    ctx.obj.console.print(Messages.written(str(output_path), "Sweep"))
