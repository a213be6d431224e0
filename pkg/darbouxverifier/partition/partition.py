import logging
import numpy as np

from darbouxverifier.aux.errors import (
    ArgumentError,
    BaseMismatch,
    DomainError,
    MonotonicityError,
)
from darbouxverifier.aux.rounding import MERGE_TOLERANCE
from darbouxverifier.partition.interval import ClosedInterval

logger = logging.getLogger(__name__)


def merge_breakpoints(base, points, merge_tolerance=MERGE_TOLERANCE):
    """Sort `points`, pin the ends to `base` and drop near-duplicates."""
    if base.is_degenerate:
        return np.array([base.a])
    points = np.sort(np.asarray(points, dtype=float))
    tol = merge_tolerance * base.length
    interior = points[(points > base.a + tol) & (points < base.b - tol)]
    if interior.size > 1:
        keep = np.concatenate(([True], np.diff(interior) > tol))
        interior = interior[keep]
    return np.concatenate(([base.a], interior, [base.b]))


class Partition(object):
    def __init__(self, base, breakpoints, merge_tolerance=MERGE_TOLERANCE):
        super().__init__()
        points = np.asarray(breakpoints, dtype=float)
        if points.size == 0:
            raise ArgumentError("a partition needs at least one breakpoint")
        tol = merge_tolerance * max(base.length, 0.0)
        if points.min() < base.a - tol or points.max() > base.b + tol:
            raise DomainError(
                "breakpoints outside of [{}, {}]".format(base.a, base.b)
            )
        self.__base = base
        self.__merge_tolerance = merge_tolerance
        self.__breakpoints = merge_breakpoints(base, points, merge_tolerance)
        self.__breakpoints.flags.writeable = False

    @property
    def base(self):
        return self.__base

    @property
    def breakpoints(self):
        return self.__breakpoints

    @property
    def merge_tolerance(self):
        return self.__merge_tolerance

    @property
    def lefts(self):
        return self.__breakpoints[:-1]

    @property
    def rights(self):
        return self.__breakpoints[1:]

    @property
    def size(self):
        return self.__breakpoints.size - 1

    def __len__(self):
        return self.size

    def lengths(self):
        return np.diff(self.__breakpoints)

    def cells(self):
        return [ClosedInterval(l, r) for l, r in zip(self.lefts, self.rights)]

    def mesh(self):
        return float(self.lengths().max()) if self.size > 0 else 0.0

    def refines(self, other):
        if self.base != other.base:
            return False
        tol = self.__merge_tolerance * self.base.length
        idx = np.searchsorted(self.__breakpoints, other.breakpoints)
        idx = np.clip(idx, 1, self.__breakpoints.size - 1)
        gaps = np.minimum(
            np.abs(self.__breakpoints[idx] - other.breakpoints),
            np.abs(self.__breakpoints[idx - 1] - other.breakpoints),
        )
        return bool(np.all(gaps <= tol)) if self.size > 0 else True

    def restrict(self, first, last):
        """Sub-partition made of cells `first`..`last - 1`."""
        points = self.__breakpoints[first : last + 1]
        return Partition(
            ClosedInterval(points[0], points[-1]), points, self.__merge_tolerance
        )

    def __eq__(self, other):
        return (
            isinstance(other, Partition)
            and self.base == other.base
            and np.array_equal(self.breakpoints, other.breakpoints)
        )

    def __hash__(self):
        return hash((self.base, self.__breakpoints.tobytes()))

    def __repr__(self):
        return "Partition({}, {} cells)".format(self.base.to_list(), self.size)

    def to_list(self):
        return self.__breakpoints.tolist()


def uniform_partition(interval, n):
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ArgumentError("number of cells must be a positive integer, got {}".format(n))
    return Partition(interval, np.linspace(interval.a, interval.b, int(n) + 1))


def refine(partition, points):
    points = np.asarray(list(points), dtype=float)
    if points.size == 0:
        return partition
    base = partition.base
    if points.min() < base.a or points.max() > base.b:
        raise DomainError(
            "refinement points outside of [{}, {}]".format(base.a, base.b)
        )
    return Partition(
        base,
        np.union1d(partition.breakpoints, points),
        partition.merge_tolerance,
    )


def common_refinement(p, q):
    if p.base != q.base:
        raise BaseMismatch(
            "partitions of {} and {} have no common refinement".format(
                p.base.to_list(), q.base.to_list()
            )
        )
    return Partition(
        p.base, np.union1d(p.breakpoints, q.breakpoints), p.merge_tolerance
    )


def concatenate(partitions):
    """Join partitions of consecutive intervals into one partition."""
    partitions = list(partitions)
    for left, right in zip(partitions[:-1], partitions[1:]):
        if left.base.b != right.base.a:
            raise BaseMismatch("partitions are not adjacent")
    base = ClosedInterval(partitions[0].base.a, partitions[-1].base.b)
    points = np.concatenate([p.breakpoints for p in partitions])
    return Partition(base, np.unique(points), partitions[0].merge_tolerance)


def mesh(partition):
    return partition.mesh()


def induced_partition(partition, integrator):
    """Image of `partition` under a nondecreasing integrator.

    Flat stretches of the integrator collapse to a single breakpoint, so the
    corresponding cells vanish from the induced partition.
    """
    lo, hi = integrator.enclose(partition.breakpoints)
    values = integrator.evaluate(partition.breakpoints)
    slack = (hi - lo)[1:] + (hi - lo)[:-1] + np.spacing(np.abs(values[1:])) * 4
    drops = values[:-1] - values[1:]
    if np.any(drops > slack):
        k = int(np.argmax(drops - slack))
        raise MonotonicityError(
            "integrator decreases on [{}, {}]".format(
                partition.breakpoints[k], partition.breakpoints[k + 1]
            )
        )
    values = np.maximum.accumulate(values)
    base = ClosedInterval(values[0], values[-1])
    if base.is_degenerate:
        logger.debug("integrator is constant on %s", partition.base.to_list())
    return Partition(base, values, partition.merge_tolerance)
