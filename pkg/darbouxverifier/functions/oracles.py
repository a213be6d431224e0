"""Range oracles: vectorized maps from cell arrays to (inf, sup) enclosures."""

from enum import Enum
import numpy as np

from darbouxverifier.aux.utils import Functor, as_array


class OracleKind(Enum):
    """How much a range enclosure can be trusted.

    * Exact: returns inf and sup (up to floating-point evaluation)
    * Enclosing: returns a sound bracket that may be wider than the range
    * Sampled: returns min and max over sample points (heuristic)
    """

    Exact = "exact"
    Enclosing = "enclosing"
    Sampled = "sampled"

    def is_certifiable(self):
        return self != OracleKind.Sampled

    @staticmethod
    def weakest(*kinds):
        order = [OracleKind.Exact, OracleKind.Enclosing, OracleKind.Sampled]
        return max(kinds, key=order.index)


class PiecewiseMonotoneOracle(Functor):
    """Exact range of a function that is monotone between known points.

    `critical_points` are the points where monotonicity may change, `jumps`
    are `(c, left_limit, right_limit)` triples for discontinuities. The range
    over [l, r] is spanned by the values at l and r, the values at interior
    critical points and the one-sided limits reachable from inside [l, r].
    """

    def __init__(self, evaluate, critical_points=(), jumps=()):
        super().__init__()
        self.evaluate = evaluate
        self.critical_points = np.sort(as_array(list(critical_points)))
        self.jumps = list(jumps)

    def __call__(self, lefts, rights):
        lefts, rights = as_array(lefts), as_array(rights)
        at_left, at_right = self.evaluate(lefts), self.evaluate(rights)
        lo = np.minimum(at_left, at_right)
        hi = np.maximum(at_left, at_right)
        if self.critical_points.size > 0:
            values = self.evaluate(self.critical_points)
            for c, v in zip(self.critical_points, values):
                inside = (lefts < c) & (c < rights)
                lo = np.where(inside, np.minimum(lo, v), lo)
                hi = np.where(inside, np.maximum(hi, v), hi)
        for c, left_limit, right_limit in self.jumps:
            from_left = (lefts < c) & (c <= rights)
            from_right = (lefts <= c) & (c < rights)
            lo = np.where(from_left, np.minimum(lo, left_limit), lo)
            hi = np.where(from_left, np.maximum(hi, left_limit), hi)
            lo = np.where(from_right, np.minimum(lo, right_limit), lo)
            hi = np.where(from_right, np.maximum(hi, right_limit), hi)
        return lo, hi


class SampledOracle(Functor):
    def __init__(self, evaluate, n_samples=64):
        super().__init__()
        assert n_samples >= 2
        self.evaluate = evaluate
        self.n_samples = n_samples
        self.__offsets = np.linspace(0.0, 1.0, n_samples)

    def __call__(self, lefts, rights):
        lefts, rights = as_array(lefts), as_array(rights)
        samples = lefts[..., None] + (rights - lefts)[..., None] * self.__offsets
        samples[..., -1] = rights
        values = self.evaluate(samples)
        return values.min(axis=-1), values.max(axis=-1)


class ThomaeOracle(Functor):
    """Range of Thomae's function with denominators capped at `max_denominator`.

    Nonzero values sit on finitely many rationals p/q, so the supremum over a
    cell is 1/q for the smallest q with a multiple of 1/q in the cell and the
    infimum over a nondegenerate cell is 0.
    """

    def __init__(self, max_denominator):
        super().__init__()
        self.max_denominator = max_denominator

    def __call__(self, lefts, rights):
        lefts, rights = as_array(lefts), as_array(rights)
        hi = np.zeros(np.broadcast(lefts, rights).shape)
        for q in range(self.max_denominator, 0, -1):
            lq, rq = lefts * q, rights * q
            lq = lq - 8 * np.spacing(np.maximum(np.abs(lq), 1.0))
            rq = rq + 8 * np.spacing(np.maximum(np.abs(rq), 1.0))
            hit = np.ceil(lq) <= np.floor(rq)
            hi = np.where(hit, 1.0 / q, hi)
        at_point = thomae_values(lefts, self.max_denominator)
        degenerate = lefts == rights
        lo = np.where(degenerate, at_point, 0.0)
        hi = np.where(degenerate, at_point, hi)
        return lo, hi


def thomae_values(x, max_denominator):
    x = as_array(x)
    values = np.zeros(x.shape)
    for q in range(max_denominator, 0, -1):
        xq = x * q
        hit = np.abs(xq - np.rint(xq)) <= 8 * np.spacing(np.maximum(np.abs(xq), 1.0))
        values = np.where(hit, 1.0 / q, values)
    return values


def interval_product(lo1, hi1, lo2, hi2):
    products = np.stack([lo1 * lo2, lo1 * hi2, hi1 * lo2, hi1 * hi2])
    return products.min(axis=0), products.max(axis=0)
