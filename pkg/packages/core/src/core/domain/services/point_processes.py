"""
Seeded samplers for the Poisson, Matérn cluster and Strauss models.

Every sampler draws from the generator returned by
:func:`core.utils.seeding.rng_for`, so a (model, seed, stream) triple always
produces the same pattern.
"""

from collections import defaultdict

import numpy as np
import structlog

from ...utils.seeding import rng_for
from ..entities.exceptions import InvalidModelError
from ..entities.point_pattern import PointPattern
from ..value_objects.model_spec import (
    MaternParams,
    ModelSpec,
    PoissonParams,
    StraussParams,
)
from ..value_objects.seed_spec import SeedSpec
from ..value_objects.window import Window

logger = structlog.get_logger(__name__)

# Uniforms drawn per Metropolis-Hastings batch.
_MH_BATCH = 4096


def _uniform_in(window: Window, count: int, rng: np.random.Generator) -> np.ndarray:
    u = rng.random((count, 2))
    return np.column_stack(
        [window.x0 + window.width * u[:, 0], window.y0 + window.height * u[:, 1]]
    )


def sample_poisson(window: Window, intensity: float, seed: SeedSpec) -> PointPattern:
    if intensity < 0:
        raise InvalidModelError("poisson", f"intensity must be >= 0, got {intensity}")
    rng = rng_for(seed)
    count = int(rng.poisson(intensity * window.area))
    return PointPattern.from_array(_uniform_in(window, count, rng), window)


def sample_matern_with_parents(
    window: Window, kappa: float, radius: float, mu: float, seed: SeedSpec
) -> tuple[PointPattern, np.ndarray]:
    """A Matérn cluster sample together with all parents that were drawn.

    Parents live on the window dilated by ``radius`` so clusters centred just
    outside still contribute offspring.
    """
    if kappa < 0 or mu < 0 or radius <= 0:
        raise InvalidModelError(
            "matern", f"need kappa, mu >= 0 and radius > 0, got {kappa}, {mu}, {radius}"
        )
    rng = rng_for(seed)
    dilated = window.dilate(radius)
    parents = _uniform_in(dilated, int(rng.poisson(kappa * dilated.area)), rng)
    offspring_counts = rng.poisson(mu, size=len(parents))
    centres = np.repeat(parents, offspring_counts, axis=0)

    total = len(centres)
    theta = 2 * np.pi * rng.random(total)
    rho = radius * np.sqrt(rng.random(total))
    offspring = centres + np.column_stack([rho * np.cos(theta), rho * np.sin(theta)])

    inside = (
        (offspring[:, 0] >= window.x0)
        & (offspring[:, 0] <= window.x1)
        & (offspring[:, 1] >= window.y0)
        & (offspring[:, 1] <= window.y1)
    )
    return PointPattern.from_array(offspring[inside], window), parents


def sample_matern_cluster(
    window: Window, kappa: float, radius: float, mu: float, seed: SeedSpec
) -> PointPattern:
    pattern, _ = sample_matern_with_parents(window, kappa, radius, mu, seed)
    return pattern


class _StraussState:
    """Current points of the chain with a cell hash of side ``radius``."""

    def __init__(self, window: Window, radius: float):
        self.window = window
        self.radius = radius
        self.radius_sq = radius * radius
        self.xs: list[float] = []
        self.ys: list[float] = []
        self.cells: defaultdict[tuple[int, int], list[int]] = defaultdict(list)

    def __len__(self) -> int:
        return len(self.xs)

    def _cell(self, x: float, y: float) -> tuple[int, int]:
        return (
            int((x - self.window.x0) // self.radius),
            int((y - self.window.y0) // self.radius),
        )

    def close_neighbours(self, x: float, y: float, skip: int = -1) -> int:
        cx, cy = self._cell(x, y)
        count = 0
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for k in self.cells.get((cx + dx, cy + dy), ()):
                    if k == skip:
                        continue
                    ex, ey = self.xs[k] - x, self.ys[k] - y
                    if ex * ex + ey * ey <= self.radius_sq:
                        count += 1
        return count

    def add(self, x: float, y: float) -> None:
        self.cells[self._cell(x, y)].append(len(self.xs))
        self.xs.append(x)
        self.ys.append(y)

    def remove(self, k: int) -> None:
        """Swap-remove point ``k``; the last point takes its index."""
        last = len(self.xs) - 1
        self.cells[self._cell(self.xs[k], self.ys[k])].remove(k)
        if k != last:
            moved = self.cells[self._cell(self.xs[last], self.ys[last])]
            moved[moved.index(last)] = k
            self.xs[k], self.ys[k] = self.xs[last], self.ys[last]
        self.xs.pop()
        self.ys.pop()

    def as_array(self) -> np.ndarray:
        return np.column_stack([self.xs, self.ys]) if self.xs else np.zeros((0, 2))


def sample_strauss(
    window: Window,
    beta: float,
    gamma: float,
    radius: float,
    chain: int,
    burnin: int,
    seed: SeedSpec,
) -> PointPattern:
    """Approximate Strauss sample from a birth-death Metropolis-Hastings chain.

    The target density is proportional to ``beta ** n * gamma ** s`` with
    ``s`` the number of pairs at distance at most ``radius``. The chain runs
    ``burnin`` proposals and then ``chain`` more; the state after the last
    proposal is returned. The chain starts from a Poisson pattern of intensity
    ``beta * (1 + gamma) / 2``, thinned to a valid hard-core state when
    ``gamma == 0``.
    """
    if not 0 <= gamma <= 1:
        raise InvalidModelError("strauss", f"gamma must lie in [0, 1], got {gamma}")
    if beta <= 0 or radius <= 0:
        raise InvalidModelError("strauss", "beta and radius must be positive")
    if chain < burnin:
        raise InvalidModelError("strauss", "chain length must be at least burn-in")

    rng = rng_for(seed)
    state = _StraussState(window, radius)
    start = _uniform_in(
        window, int(rng.poisson(beta * (1 + gamma) / 2 * window.area)), rng
    )
    for x, y in start:
        if gamma > 0 or state.close_neighbours(x, y) == 0:
            state.add(float(x), float(y))

    scale = beta * window.area
    total = burnin + chain
    accepted = 0
    done = 0
    while done < total:
        batch = min(_MH_BATCH, total - done)
        draws = rng.random((batch, 4))
        for move, u1, u2, u_accept in draws:
            n = len(state)
            if move < 0.5:
                x = window.x0 + window.width * u1
                y = window.y0 + window.height * u2
                t = state.close_neighbours(x, y)
                if u_accept < scale * gamma**t / (n + 1):
                    state.add(x, y)
                    accepted += 1
            elif n > 0:
                k = min(int(u1 * n), n - 1)
                t = state.close_neighbours(state.xs[k], state.ys[k], skip=k)
                weight = scale * gamma**t
                if weight == 0 or u_accept < n / weight:
                    state.remove(k)
                    accepted += 1
        done += batch

    logger.debug(
        "strauss_chain",
        chain=chain,
        burnin=burnin,
        accepted=accepted,
        n_points=len(state),
    )
    return PointPattern.from_array(state.as_array(), window)


def sample(model: ModelSpec, seed: SeedSpec) -> PointPattern:
    """Draw one pattern from ``model``."""
    params = model.params
    if isinstance(params, PoissonParams):
        return sample_poisson(model.window, params.intensity, seed)
    if isinstance(params, MaternParams):
        return sample_matern_cluster(
            model.window, params.kappa, params.radius, params.mu, seed
        )
    if isinstance(params, StraussParams):
        return sample_strauss(
            model.window,
            params.beta,
            params.gamma,
            params.radius,
            model.chain,
            model.burnin,
            seed,
        )
    raise InvalidModelError(str(model.variant), "unknown model parameters")
