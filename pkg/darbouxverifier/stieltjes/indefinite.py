import logging
import numpy as np

from darbouxverifier.aux.errors import ArgumentError, DomainError, WidthExceeded
from darbouxverifier.aux.enclosure import Rigor
from darbouxverifier.aux.rounding import ULPS_PER_TERM
from darbouxverifier.darboux.integrability import integral_enclosure
from darbouxverifier.darboux.sums import cell_terms
from darbouxverifier.partition.interval import ClosedInterval
from darbouxverifier.partition.partition import uniform_partition
from darbouxverifier.stieltjes.integrator import Integrator, Monotonicity

logger = logging.getLogger(__name__)

DEFAULT_GRID_CELLS = 1024


def spread(values, ulps=2):
    return ulps * np.spacing(np.abs(values))


class IndefiniteIntegralTable(object):
    """Certified values of Φ(x) = anchor + ∫_[a,x] φ on a grid.

    Off the grid, Φ(x) is bracketed from the nearest grid point x_j by the
    range of φ between x_j and x times the distance.
    """

    def __init__(self, density, points, lo, hi):
        super().__init__()
        self.__density = density
        self.__points = np.asarray(points, dtype=float)
        self.__lo = np.asarray(lo, dtype=float)
        self.__hi = np.asarray(hi, dtype=float)
        self.__domain = ClosedInterval(self.__points[0], self.__points[-1])

    @property
    def points(self):
        return self.__points

    @property
    def lo(self):
        return self.__lo

    @property
    def hi(self):
        return self.__hi

    @property
    def max_width(self):
        return float(np.max(self.__hi - self.__lo))

    def nearest(self, xs):
        if self.__points.size == 1:
            return np.zeros(xs.shape, dtype=int)
        k = np.clip(np.searchsorted(self.__points, xs), 1, self.__points.size - 1)
        left_closer = xs - self.__points[k - 1] <= self.__points[k] - xs
        return np.where(left_closer, k - 1, k)

    def enclose(self, xs):
        xs = np.clip(xs, self.__domain.a, self.__domain.b)
        j = self.nearest(xs)
        anchors = self.__points[j]
        distance = xs - anchors
        plo, phi = self.__density.ranges(np.minimum(xs, anchors), np.maximum(xs, anchors))
        a1, a2 = plo * distance, phi * distance
        inc_lo, inc_hi = np.minimum(a1, a2), np.maximum(a1, a2)
        lo = self.__lo[j] + inc_lo
        hi = self.__hi[j] + inc_hi
        return lo - spread(lo) - spread(inc_lo), hi + spread(hi) + spread(inc_hi)

    def increments(self, lefts, rights):
        plo, phi = self.__density.ranges(lefts, rights)
        lengths = rights - lefts
        d_lo, d_hi = plo * lengths, phi * lengths
        return d_lo - spread(d_lo), d_hi + spread(d_hi)

    def ranges(self, lefts, rights):
        """Φ([l, r]) from both ends: Φ(l) plus, or Φ(r) minus, the possible ∫ φ over a subinterval."""
        lo_l, hi_l = self.enclose(lefts)
        lo_r, hi_r = self.enclose(rights)
        plo, phi = self.__density.ranges(lefts, rights)
        lengths = rights - lefts
        down = np.minimum(0.0, plo * lengths)
        up = np.maximum(0.0, phi * lengths)
        lo = np.maximum(lo_l + down, lo_r - up)
        hi = np.minimum(hi_l + up, hi_r - down)
        lo, hi = lo - spread(lo), hi + spread(hi)
        return lo, np.maximum(lo, hi)


def cumulative_bounds(terms, starts, anchor, ulps_per_term):
    blocks = np.add.reduceat(terms, starts)
    block_slack = np.add.reduceat(np.spacing(np.abs(terms)), starts)
    values = anchor + np.concatenate(([0.0], np.cumsum(blocks)))
    slack = ulps_per_term * np.concatenate(
        ([0.0], np.cumsum(block_slack + np.spacing(np.abs(blocks))))
    )
    slack += ulps_per_term * np.spacing(np.abs(values))
    return values, slack


def build_indefinite_integral(
    density,
    a=None,
    anchor=0.0,
    grid_cells=DEFAULT_GRID_CELLS,
    tol=1e-6,
    budget=None,
    refinement=None,
    ulps_per_term=ULPS_PER_TERM,
):
    a = density.domain.a if a is None else float(a)
    if a < density.domain.a or a > density.domain.b:
        raise DomainError(
            "start {} outside of the domain {} of {}".format(
                a, density.domain.to_list(), density.name
            )
        )
    if not tol > 0:
        raise ArgumentError("tolerance must be positive, got {}".format(tol))
    domain = ClosedInterval(a, density.domain.b)

    if domain.is_degenerate:
        table = IndefiniteIntegralTable(density, [a], [anchor], [anchor])
    else:
        grid = uniform_partition(domain, grid_cells)
        identity = Integrator.identity(domain)
        enclosure = integral_enclosure(
            density, identity, domain, tol, budget, seed=grid, refinement=refinement
        )
        if not enclosure.converged:
            raise WidthExceeded(
                "∫ {} stuck at width {:.3e} > {:.3e}".format(
                    density.name, enclosure.width, tol
                ),
                best=enclosure,
            )
        partition = enclosure.partition
        terms = cell_terms(density, identity, partition)
        indices = np.searchsorted(partition.breakpoints, grid.breakpoints)
        lo, lo_slack = cumulative_bounds(
            terms.certified_lower, indices[:-1], anchor, ulps_per_term
        )
        hi, hi_slack = cumulative_bounds(
            terms.certified_upper, indices[:-1], anchor, ulps_per_term
        )
        table = IndefiniteIntegralTable(
            density,
            partition.breakpoints[indices],
            np.nextafter(lo - lo_slack, -np.inf),
            np.nextafter(hi + hi_slack, np.inf),
        )
        logger.debug(
            "indefinite integral of %s on %s: %d grid points, %d cells, width %.3e",
            density.name,
            domain.to_list(),
            grid.breakpoints.size,
            partition.size,
            table.max_width,
        )

    total = density.range_enclosure(domain)
    return Integrator(
        domain,
        table.enclose,
        range_oracle=table.ranges,
        increment_oracle=table.increments,
        monotonicity=Monotonicity.of_density(total.lo, total.hi),
        density=density,
        anchor=anchor,
        rigor=Rigor.of(density.is_certifiable),
        name="∫{}".format(density.name),
        tolerance=tol,
    )
