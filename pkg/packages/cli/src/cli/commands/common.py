"""
Common Click utilities, decorators, and options.
"""

import asyncio
import inspect
import sys
from collections.abc import Callable, Iterator
from contextlib import contextmanager
from functools import wraps
from pathlib import Path
from typing import Any, TypeVar

import click
import structlog
from core.domain.enums import FunctionalStatisticId, ModelVariant, StatisticId
from core.domain.value_objects.model_spec import ModelSpec, PoissonParams
from core.domain.value_objects.statistic_spec import (
    FunctionalStatisticSpec,
    StatisticSpec,
)
from core.domain.value_objects.window import Window
from core.services.replication_runner import ProgressCallback
from pydantic import BaseModel
from pydantic import ValidationError as PydanticValidationError
from rich.console import Console
from rich.markup import escape
from rich.progress import BarColumn, MofNCompleteColumn, Progress, TextColumn

from ..entities import JobSpec, ModelFlags
from ..exceptions import exit_code_for
from ..presentation.styles import Messages

R = TypeVar("R", bound=BaseModel)

MODEL_OPTION_NAMES = (
    "model",
    "window",
    "intensity",
    "kappa",
    "mu",
    "beta",
    "gamma",
    "radius",
    "chain",
    "burnin",
)


class WindowParamType(click.ParamType):
    """``x0,y0,x1,y1`` with four finite numbers and positive extent."""

    name = "x0,y0,x1,y1"

    def convert(
        self, value: Any, param: click.Parameter | None, ctx: click.Context | None
    ) -> Window:
        if isinstance(value, Window):
            return value
        try:
            return Window.model_validate(value)
        except PydanticValidationError as e:
            self.fail(_first_message(e), param, ctx)


WINDOW = WindowParamType()


def window_option(func: Callable) -> Callable:
    return click.option(
        "--window",
        type=WINDOW,
        default=None,
        help="Observation window x0,y0,x1,y1 (default from settings)",
    )(func)


def model_options(func: Callable) -> Callable:
    """Model flags, collected into a single ``model_options`` keyword.

    ``--model`` is a variant name or the path of a model JSON file.
    """

    @click.option(
        "--model",
        "model",
        default=ModelVariant.POISSON.value,
        show_default=True,
        help="poisson, matern, strauss or a model JSON file",
    )
    @window_option
    @click.option("--intensity", type=float, default=None, help="Poisson intensity")
    @click.option("--kappa", type=float, default=None, help="Matérn parent intensity")
    @click.option("--mu", type=float, default=None, help="Matérn mean offspring")
    @click.option("--beta", type=float, default=None, help="Strauss activity")
    @click.option("--gamma", type=float, default=None, help="Strauss interaction")
    @click.option(
        "--radius", type=float, default=None, help="Cluster or interaction radius"
    )
    @click.option("--chain", type=int, default=None, help="Strauss chain length")
    @click.option("--burnin", type=int, default=None, help="Strauss burn-in")
    @wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        options = {name: kwargs.pop(name) for name in MODEL_OPTION_NAMES}
        return func(*args, model_options=options, **kwargs)

    return wrapper


input_option = click.option(
    "--in",
    "input_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    required=True,
    help="Point pattern CSV (x,y)",
)
output_option = click.option(
    "--out",
    "output_path",
    type=click.Path(dir_okay=False, path_type=Path),
    required=True,
    help="Output file",
)
M_option = click.option(
    "--M", "M", type=float, default=None, help="Feature size bound (default √2·10)"
)
rf_option = click.option(
    "--rf", "r_f", type=float, default=None, help="Final radius r_f (default 1.5)"
)


def seed_option(func: Callable) -> Callable:
    return click.option(
        "--seed",
        type=click.IntRange(0, 2**64 - 1),
        required=True,
        help="Master seed",
    )(func)


def alpha_option(func: Callable) -> Callable:
    return click.option(
        "--alpha", type=float, default=None, help="Test level (default 0.05)"
    )(func)


def resolve_alpha(obj: Any, alpha: float | None) -> float:
    return alpha if alpha is not None else obj.container.settings.defaults.alpha


def resolve_window(obj: Any, window: Window | None) -> Window:
    return window or obj.container.default_window


def resolve_model(obj: Any, options: dict[str, Any]) -> ModelSpec:
    """Build the model from its flags or load it from a JSON file."""
    name = options["model"]
    window = options["window"]
    if name not in {variant.value for variant in ModelVariant}:
        path = Path(name)
        if not path.is_file():
            raise click.BadParameter(
                f"'{name}' is neither a model variant nor a file", param_hint="--model"
            )
        model = obj.container.get_json_store().read_model(path)
        if window is not None and window != model.window:
            model = model.model_copy(update={"window": window})
        return model

    defaults = obj.container.settings.defaults
    flags = {k: v for k, v in options.items() if v is not None and k != "model"}
    flags.setdefault("window", defaults.window)
    flags.setdefault("chain", defaults.chain)
    flags.setdefault("burnin", defaults.burnin)
    if name == ModelVariant.POISSON.value:
        flags.setdefault("intensity", defaults.intensity)
    try:
        return ModelFlags(variant=name, **flags).to_model()
    except PydanticValidationError as e:
        raise click.BadParameter(_first_message(e), param_hint="--model") from e


def null_model_for(obj: Any, path: Path | None, window: Window) -> ModelSpec:
    """The model in ``path``, or the default Poisson null on ``window``."""
    if path is not None:
        return obj.container.get_json_store().read_model(path)
    intensity = obj.container.settings.defaults.intensity
    return ModelSpec(
        variant=ModelVariant.POISSON,
        window=window,
        params=PoissonParams(intensity=intensity),
    )


def scalar_statistic_spec(
    obj: Any, stat: str, r: float | None, M: float | None, r_f: float | None
) -> StatisticSpec:
    defaults = obj.container.settings.defaults
    r_f = r_f if r_f is not None else defaults.r_final
    if r is None:
        r = {
            StatisticId.T_CLUSTER.value: defaults.r_cluster,
            StatisticId.T_LOOP.value: defaults.r_loop,
        }.get(stat, r_f)
    return build(
        StatisticSpec,
        id=stat,
        r=r,
        M=M if M is not None else defaults.M,
        r_f=r_f,
    )


def functional_statistic_spec(
    obj: Any,
    stat: str,
    M: float | None,
    r_f: float | None,
    grid: int | None,
    r_max: float | None = None,
) -> FunctionalStatisticSpec:
    defaults = obj.container.settings.defaults
    if grid is None:
        grid = (
            defaults.surface_points
            if stat == FunctionalStatisticId.BETTI_SURFACE.value
            else defaults.curve_points
        )
    return build(
        FunctionalStatisticSpec,
        id=stat,
        M=M if M is not None else defaults.M,
        r_f=r_f if r_f is not None else defaults.r_final,
        grid_points=grid,
        r_max=r_max,
    )


def build(model_type: type[R], **fields: Any) -> R:
    """Validate flag values into ``model_type``; failures are usage errors."""
    try:
        return model_type(**fields)
    except PydanticValidationError as e:
        raise click.UsageError(_first_message(e)) from e


def start_job(obj: Any, job: JobSpec) -> None:
    structlog.contextvars.clear_contextvars()
    structlog.contextvars.bind_contextvars(**job.log_context())
    structlog.get_logger(__name__).info(
        "job_started",
        inputs=[str(p) for p in job.inputs],
        outputs=[str(p) for p in job.outputs],
        workers=obj.container.workers,
    )


def make_job(subcommand: str, **fields: Any) -> JobSpec:
    return build(JobSpec, subcommand=subcommand, **fields)


@contextmanager
def progress_reporter(
    console: Console, total: int, description: str
) -> Iterator[ProgressCallback]:
    """A rich progress bar on the error console, fed in finished replications."""
    with Progress(
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        MofNCompleteColumn(),
        console=console,
        transient=True,
        disable=not console.is_terminal,
    ) as progress:
        task = progress.add_task(description, total=total)

        def advance(done: int) -> None:
            progress.advance(task, done)

        yield advance


def async_command(func: Callable) -> Callable:
    """Run an async Click command, closing the container and mapping errors.

    Click's own control-flow exceptions pass through untouched. Anything else
    is printed as a styled error and exits with the code its type maps to.
    """

    @wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return asyncio.run(_run_then_close(func, args, kwargs))
        except (click.ClickException, click.Abort, click.exceptions.Exit):
            raise
        except Exception as e:
            _report_error(args, e)
            sys.exit(exit_code_for(e))

    return wrapper


def _first_message(error: PydanticValidationError) -> str:
    first = error.errors()[0]
    message = str(first.get("msg", error))
    return message.removeprefix("Value error, ")


async def _close_container(container: Any) -> None:
    close = getattr(container, "close", None)
    if inspect.iscoroutinefunction(close):
        try:
            await close()
        except Exception:
            pass


def _container_from_args(args: Any) -> Any:
    if not args:
        return None
    return getattr(getattr(args[0], "obj", None), "container", None)


async def _run_then_close(func: Callable, args: Any, kwargs: Any) -> Any:
    try:
        return await func(*args, **kwargs)
    finally:
        await _close_container(_container_from_args(args))


def _report_error(args: Any, error: Exception) -> None:
    obj = getattr(args[0], "obj", None) if args else None
    console = getattr(obj, "console", None)
    if console is None:
        click.echo(str(error), err=True)
        return
    console.print(Messages.error(escape(str(error))))
    if getattr(obj, "verbose", False):
        console.print_exception()
