"""CLI commands that work on a single point pattern or diagram."""

from pathlib import Path

import click
import numpy as np
from core.domain.entities.persistence import PersistenceDiagram
from core.domain.entities.summary import SummaryCurve
from core.domain.enums import CurveKind, FunctionalStatisticId, StatisticId
from core.domain.services.geometry import build_alpha_filtration, build_delaunay
from core.domain.services.oracle import gilbert_components, grid_betti
from core.domain.services.persistence import betti_numbers_at, persistence_diagram
from core.domain.services.point_processes import sample
from core.domain.services.summaries import (
    apf_curve,
    betti_life_surface,
    cluster_statistic_curve,
    death_count_curve,
    persistent_betti_curve,
    ripley_l,
)
from core.domain.value_objects.grid_spec import GridSpec
from core.domain.value_objects.seed_spec import SeedSpec
from core.domain.value_objects.window import Window
from core.gateways.storage import format_number

from ..presentation.styles import Messages
from .common import (
    M_option,
    async_command,
    build,
    functional_statistic_spec,
    input_option,
    make_job,
    model_options,
    output_option,
    resolve_model,
    resolve_window,
    rf_option,
    seed_option,
    start_job,
    window_option,
)

SUMMARY_STATS = (
    FunctionalStatisticId.DEATH_CURVE.value,
    CurveKind.PERSISTENT_BETTI_0.value,
    StatisticId.T_CLUSTER.value,
    StatisticId.T_LOOP.value,
    StatisticId.APF0.value,
    StatisticId.APF1.value,
    FunctionalStatisticId.BETTI_SURFACE.value,
)


@click.command("simulate")
@model_options
@seed_option
@click.option("--stream", type=click.IntRange(0), default=0, help="Stream index")
@output_option
@click.pass_context
@async_command
async def simulate(
    ctx: click.Context,
    model_options: dict,
    seed: int,
    stream: int,
    output_path: Path,
) -> None:
    """Draw one pattern from a point process model."""
    model = resolve_model(ctx.obj, model_options)
    start_job(
        ctx.obj,
        make_job("simulate", outputs=[output_path], window=model.window, seed=seed),
    )

    pattern = sample(model, SeedSpec(master=seed, stream=stream))
    ctx.obj.container.get_csv_store().write_pattern(output_path, pattern)
    ctx.obj.console.print(
        Messages.written(str(output_path), f"{len(pattern)} points of {model.label}")
    )


@click.command("pd")
@input_option
@window_option
@M_option
@rf_option
@output_option
@click.pass_context
@async_command
async def pd(
    ctx: click.Context,
    input_path: Path,
    window: Window | None,
    M: float | None,
    r_f: float | None,
    output_path: Path,
) -> None:
    """Compute the M-bounded persistence diagram of a pattern."""
    defaults = ctx.obj.container.settings.defaults
    window = resolve_window(ctx.obj, window)
    start_job(
        ctx.obj,
        make_job("pd", inputs=[input_path], outputs=[output_path], window=window),
    )

    store = ctx.obj.container.get_csv_store()
    pattern = store.read_pattern(input_path, window)
    diagram = persistence_diagram(
        pattern,
        M if M is not None else defaults.M,
        r_f if r_f is not None else defaults.r_final,
    )
    store.write_diagram(output_path, diagram)
    ctx.obj.console.print(
        Messages.written(
            str(output_path),
            f"{len(diagram.of_dimension(0))} cluster and "
            f"{len(diagram.of_dimension(1))} loop features",
        )
    )


@click.command("summary")
@click.option(
    "--diagram",
    "diagram_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    required=True,
    help="Diagram CSV written by 'pd'",
)
@click.option("--stat", type=click.Choice(SUMMARY_STATS), required=True)
@click.option(
    "--r", "r", type=float, default=None, help="Evaluate a scalar statistic at r only"
)
@click.option("--grid", type=click.IntRange(2), default=None, help="Grid points")
@click.option(
    "--dim", type=click.IntRange(0, 1), default=0, help="Dimension for death-curve"
)
@M_option
@rf_option
@output_option
@click.pass_context
@async_command
async def summary(
    ctx: click.Context,
    diagram_path: Path,
    stat: str,
    r: float | None,
    grid: int | None,
    dim: int,
    M: float | None,
    r_f: float | None,
    output_path: Path,
) -> None:
    """Turn a diagram into a plot-ready curve or surface.

    Scalar statistics are written as functions of their integration bound;
    with --r the single value is also printed to standard output.
    """
    spec = functional_statistic_spec(
        ctx.obj,
        FunctionalStatisticId.BETTI_SURFACE.value
        if stat == FunctionalStatisticId.BETTI_SURFACE.value
        else FunctionalStatisticId.DEATH_CURVE.value,
        M,
        r_f,
        grid,
    )
    start_job(
        ctx.obj, make_job("summary", inputs=[diagram_path], outputs=[output_path])
    )

    store = ctx.obj.container.get_csv_store()
    diagram = store.read_diagram(diagram_path, spec.M, spec.r_f)

    if stat == FunctionalStatisticId.BETTI_SURFACE.value:
        b_grid, l_grid = spec.surface_grids()
        store.write_surface(output_path, betti_life_surface(diagram, b_grid, l_grid))
        ctx.obj.console.print(Messages.written(str(output_path), "Betti surface"))
        return

    if r is not None:
        if not 0 <= r <= spec.r_f:
            raise click.BadParameter(
                f"r must lie in [0, {spec.r_f:g}]", param_hint="--r"
            )
        grid_values = np.array([r])
    else:
        grid_values = np.linspace(0.0, spec.r_f, spec.grid_points)

    curve = _summary_curve(diagram, stat, dim, grid_values)
    store.write_curve(output_path, curve)
    if r is not None:
        click.echo(format_number(curve.values[-1]))
    ctx.obj.console.print(Messages.written(str(output_path), f"{stat} curve"))


def _summary_curve(
    diagram: PersistenceDiagram, stat: str, dim: int, grid_values: np.ndarray
) -> SummaryCurve:
    if stat == FunctionalStatisticId.DEATH_CURVE.value:
        return death_count_curve(diagram, dim, grid_values)
    if stat == CurveKind.PERSISTENT_BETTI_0.value:
        return persistent_betti_curve(diagram, 0.0, grid_values)
    if stat == StatisticId.T_CLUSTER.value:
        return cluster_statistic_curve(diagram, grid_values)
    if stat == StatisticId.APF0.value:
        return apf_curve(diagram, 0, grid_values)
    return apf_curve(diagram, 1, grid_values)


@click.command("ripley")
@input_option
@window_option
@click.option("--grid", type=click.IntRange(2), default=None, help="Grid points")
@click.option("--r-max", "r_max", type=float, default=None, help="Largest radius")
@output_option
@click.pass_context
@async_command
async def ripley(
    ctx: click.Context,
    input_path: Path,
    window: Window | None,
    grid: int | None,
    r_max: float | None,
    output_path: Path,
) -> None:
    """Estimate Ripley's L function with translation edge correction."""
    window = resolve_window(ctx.obj, window)
    spec = functional_statistic_spec(
        ctx.obj, FunctionalStatisticId.RIPLEY_L.value, None, None, grid, r_max
    )
    start_job(
        ctx.obj,
        make_job("ripley", inputs=[input_path], outputs=[output_path], window=window),
    )

    store = ctx.obj.container.get_csv_store()
    pattern = store.read_pattern(input_path, window)
    curve = ripley_l(pattern, spec.argument_grid(window))
    store.write_curve(output_path, curve)
    ctx.obj.console.print(Messages.written(str(output_path), "L function"))


@click.command("oracle", hidden=True)
@input_option
@window_option
@click.option(
    "--r", "radii", type=float, multiple=True, required=True, help="Disk radius"
)
@click.option("--h", "resolution", type=float, default=0.002, help="Raster cell")
@click.pass_context
@async_command
async def oracle(
    ctx: click.Context,
    input_path: Path,
    window: Window | None,
    radii: tuple[float, ...],
    resolution: float,
) -> None:
    """Compare raster, graph and alpha-complex Betti numbers (debugging aid).

    Prints ``r,beta0,beta1,gilbert,alpha_beta0,alpha_beta1`` rows.
    """
    window = resolve_window(ctx.obj, window)
    start_job(ctx.obj, make_job("oracle", inputs=[input_path], window=window))

    pattern = ctx.obj.container.get_csv_store().read_pattern(input_path, window)
    filtration = build_alpha_filtration(build_delaunay(pattern), pattern)
    click.echo("r,beta0,beta1,gilbert,alpha_beta0,alpha_beta1")
    for r in radii:
        grid = build(GridSpec, resolution=resolution, margin=r + 2 * resolution)
        beta0, beta1 = grid_betti(pattern, r, grid)
        alpha0, alpha1 = betti_numbers_at(filtration, r)
        click.echo(
            f"{format_number(r)},{beta0},{beta1},"
            f"{gilbert_components(pattern, r)},{alpha0},{alpha1}"
        )


__all__ = ["oracle", "pd", "ripley", "simulate", "summary"]
