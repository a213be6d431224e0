"""Matched Riemann sums for a monotone substitution with a possibly unbounded derivative.

On each cell I_k = [l, r] the point ξ_k with φ(ξ_k)|I_k| = Φ(r) - Φ(l) is
located by bisection. Then

    Σ f(Φ(ξ_k)) (Φ(r) - Φ(l))     is a Riemann sum of f on the induced partition,
    Σ f(Φ(ξ_k)) φ(ξ_k) |I_k|      is a Riemann sum of f(Φ)φ on the partition of I,

and both must approach the common integral as the mesh shrinks.
"""

from dataclasses import dataclass
import logging
import math
import numpy as np

from darbouxverifier.aux.errors import ArgumentError, RootNotBracketed
from darbouxverifier.aux.rounding import pairwise_sum
from darbouxverifier.aux.utils import vectorize_scalar_callable

logger = logging.getLogger(__name__)

ROOT_TOLERANCE = 1e-12
MAX_LEVEL = 16


def options_from_config(config):
    """Keyword arguments of `monotone_unbounded_check` taken from the `monotone` config section."""
    return {
        "root_tolerance": config["monotone"]["rootTolerance"],
        "max_level": config["monotone"]["maxLevel"],
    }


@dataclass(frozen=True)
class MeshLevel:
    cells: int
    lhs: float
    rhs: float
    heuristic_cells: int
    lhs_error: float = None
    rhs_error: float = None

    @property
    def gap(self):
        return abs(self.lhs - self.rhs)

    def to_dict(self):
        return {
            "cells": self.cells,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "gap": self.gap,
            "heuristic_cells": self.heuristic_cells,
            "lhs_error": self.lhs_error,
            "rhs_error": self.rhs_error,
        }


@dataclass(frozen=True)
class MonotoneReport:
    levels: tuple

    @property
    def riemann_sums_lhs(self):
        return [level.lhs for level in self.levels]

    @property
    def riemann_sums_rhs(self):
        return [level.rhs for level in self.levels]

    @property
    def gaps(self):
        return [level.gap for level in self.levels]

    @property
    def converged_gap(self):
        return self.levels[-1].gap if self.levels else math.nan

    @property
    def is_heuristic(self):
        return any(level.heuristic_cells > 0 for level in self.levels)

    def to_dict(self):
        return {
            "levels": [level.to_dict() for level in self.levels],
            "converged_gap": self.converged_gap,
            "heuristic": self.is_heuristic,
        }


def mean_value_points(derivative, lefts, rights, increments, root_tolerance=ROOT_TOLERANCE):
    """Roots of φ(ξ)(r - l) - ΔΦ in each cell; unbracketed cells get their midpoint.

    Returns the points and a mask of the cells that fell back to the midpoint.
    """
    lengths = rights - lefts

    def residual(xs):
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            return derivative(xs) * lengths - increments

    lo, hi = lefts.copy(), rights.copy()
    r_lo, r_hi = residual(lo), residual(hi)
    bracketed = np.sign(r_lo) * np.sign(r_hi) <= 0

    steps = int(math.ceil(math.log2(1.0 / root_tolerance))) + 1
    for _ in range(steps):
        mid = 0.5 * (lo + hi)
        r_mid = residual(mid)
        same = (np.sign(r_mid) == np.sign(r_lo)) & (r_mid != 0)
        lo = np.where(same, mid, lo)
        r_lo = np.where(same, r_mid, r_lo)
        hi = np.where(same, hi, mid)
        if np.all(hi - lo <= root_tolerance * lengths):
            break

    points = np.where(bracketed, 0.5 * (lo + hi), 0.5 * (lefts + rights))
    return points, ~bracketed


def monotone_unbounded_check(
    f,
    integrator,
    derivative,
    interval,
    meshes=None,
    root_tolerance=ROOT_TOLERANCE,
    max_level=MAX_LEVEL,
    closed_form=None,
    strict=False,
):
    """Compares matched Riemann sums on uniform meshes of `interval`.

    `integrator` and `derivative` are plain callables for Φ and φ; φ may blow
    up at the ends of the interval. `meshes` defaults to 2, 4, ..., 2^max_level
    cells. With `strict`, a cell without a bracketed mean value point raises
    RootNotBracketed instead of falling back to its midpoint.
    """
    if meshes is None:
        meshes = [2 ** m for m in range(1, max_level + 1)]
    meshes = list(meshes)
    if not meshes or min(meshes) < 1:
        raise ArgumentError("mesh sequence must consist of positive cell counts")
    transform = vectorize_scalar_callable(integrator)
    density = vectorize_scalar_callable(derivative)
    outer = vectorize_scalar_callable(f)

    levels = []
    for cells in meshes:
        points = np.linspace(interval.a, interval.b, cells + 1)
        lefts, rights = points[:-1], points[1:]
        values = transform(points)
        increments = np.diff(values)
        xi, fallback = mean_value_points(density, lefts, rights, increments, root_tolerance)
        if np.any(fallback):
            k = int(np.flatnonzero(fallback)[0])
            message = "no mean value point in cell {} [{}, {}]".format(k, lefts[k], rights[k])
            if strict:
                raise RootNotBracketed(message, cell=k)
            logger.warning("%s, %d cell(s) use their midpoint", message, int(fallback.sum()))
        heights = outer(transform(xi))
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            lhs = pairwise_sum(heights * increments)
            rhs = pairwise_sum(heights * density(xi) * (rights - lefts))
        levels.append(
            MeshLevel(
                cells=cells,
                lhs=lhs,
                rhs=rhs,
                heuristic_cells=int(fallback.sum()),
                lhs_error=None if closed_form is None else abs(lhs - closed_form),
                rhs_error=None if closed_form is None else abs(rhs - closed_form),
            )
        )
        logger.debug("mesh %d: lhs %.15g rhs %.15g", cells, lhs, rhs)
    return MonotoneReport(tuple(levels))
