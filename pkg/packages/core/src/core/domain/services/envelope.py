"""
Extreme rank length ordering and global envelopes over discretized curves.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.stats import rankdata

from ..entities.exceptions import GridMismatchError, ValidationError


@dataclass(frozen=True)
class GlobalEnvelope:
    p_value: float
    lower: np.ndarray
    upper: np.ndarray


def pointwise_ranks(curves: np.ndarray) -> np.ndarray:
    """Two-sided rank of every curve at every grid point (1 = most extreme).

    Tied values share the smaller rank.
    """
    from_below = rankdata(curves, method="min", axis=0)
    from_above = rankdata(-curves, method="min", axis=0)
    return np.minimum(from_below, from_above).astype(np.int64)


def erl_measure(curves: np.ndarray) -> np.ndarray:
    """Extremeness level of each row of ``curves``; 0 is the most extreme.

    A curve's rank vector is its pointwise ranks sorted ascending; vectors
    compare lexicographically and equal vectors share a level.
    """
    curves = np.asarray(curves, dtype=float)
    if curves.ndim != 2 or curves.shape[0] < 2:
        raise ValidationError(
            "curves", curves.shape, "need a matrix of at least two curves"
        )
    ranks = np.sort(pointwise_ranks(curves), axis=1)
    order = np.lexsort(ranks.T[::-1])
    levels = np.empty(len(curves), dtype=np.int64)
    level = 0
    for position, row in enumerate(order):
        if position and not np.array_equal(ranks[row], ranks[order[position - 1]]):
            level += 1
        levels[row] = level
    return levels


def global_envelope(
    observed: np.ndarray, null_curves: np.ndarray, alpha: float
) -> GlobalEnvelope:
    """ERL Monte-Carlo p-value of ``observed`` and the envelope at level ``alpha``.

    The envelope spans the null curves left after removing the
    ``ceil(alpha * (s + 1))`` most extreme ones. Curves on the same level
    are taken in lexicographic order of their values, so the envelope does
    not depend on the order of ``null_curves``.
    """
    observed = np.asarray(observed, dtype=float).ravel()
    null_curves = np.asarray(null_curves, dtype=float)
    if null_curves.ndim != 2 or null_curves.shape[0] == 0:
        raise ValidationError("null_curves", null_curves.shape, "no null curves")
    if null_curves.shape[1] != observed.shape[0]:
        raise GridMismatchError(null_curves.shape[1], observed.shape[0])

    s = null_curves.shape[0]
    levels = erl_measure(np.vstack([observed, null_curves]))
    as_extreme = int(np.count_nonzero(levels[1:] <= levels[0]))
    p_value = (1 + as_extreme) / (s + 1)

    drop = min(math.ceil(alpha * (s + 1)), s - 1)
    by_extremeness = np.lexsort((*null_curves.T[::-1], levels[1:]))
    kept = null_curves[by_extremeness[drop:]]
    return GlobalEnvelope(
        p_value=p_value, lower=kept.min(axis=0), upper=kept.max(axis=0)
    )
