from enum import Enum
import numpy as np

from darbouxverifier.aux.enclosure import Enclosure, Rigor
from darbouxverifier.aux.utils import Functor, as_array
from darbouxverifier.functions.real_function import negate
from darbouxverifier.partition.interval import ClosedInterval


class Monotonicity(Enum):
    """Monotonicity of an integrator.

    * Nondecreasing: Φ(x) <= Φ(y) for all x < y
    * Nonincreasing: Φ(x) >= Φ(y) for all x < y
    * Constant: both of the above
    * Unknown
    """

    Nondecreasing = 0
    Nonincreasing = 1
    Constant = 2
    Unknown = 3

    def is_nondecreasing(self):
        return self == Monotonicity.Nondecreasing or self == Monotonicity.Constant

    def is_nonincreasing(self):
        return self == Monotonicity.Nonincreasing or self == Monotonicity.Constant

    def negate(self):
        if self == Monotonicity.Nondecreasing:
            return Monotonicity.Nonincreasing
        if self == Monotonicity.Nonincreasing:
            return Monotonicity.Nondecreasing
        return self

    @staticmethod
    def of_density(lo, hi):
        if lo == 0 and hi == 0:
            return Monotonicity.Constant
        if lo >= 0:
            return Monotonicity.Nondecreasing
        if hi <= 0:
            return Monotonicity.Nonincreasing
        return Monotonicity.Unknown


IMAGE_CELLS = 1024


def ulp_bracket(values, ulps=2):
    values = as_array(values)
    slack = ulps * np.spacing(np.abs(values))
    return values - slack, values + slack


class Integrator(Functor):
    """A continuous integrator Φ on `domain`, known through certified brackets.

    `enclose(xs)` returns arrays (lo, hi) with lo <= Φ(xs) <= hi; `evaluate`
    returns the point value used by the defining sums (the bracket midpoint
    unless a closed form is available).
    """

    def __init__(
        self,
        domain,
        enclose,
        point=None,
        range_oracle=None,
        increment_oracle=None,
        monotonicity=Monotonicity.Nondecreasing,
        is_exact=False,
        density=None,
        anchor=None,
        rigor=Rigor.Certified,
        name="Φ",
        tolerance=0.0,
    ):
        super().__init__()
        self.__domain = domain
        self.__enclose = enclose
        self.__point = point
        self.__range_oracle = range_oracle
        self.__increment_oracle = increment_oracle
        self.__monotonicity = monotonicity
        self.__is_exact = is_exact
        self.__density = density
        self.__rigor = rigor
        self.__name = name
        self.__tolerance = float(tolerance)
        if anchor is None:
            lo, hi = enclose(as_array([domain.a]))
            anchor = 0.5 * float(lo[0] + hi[0])
        self.__anchor = float(anchor)

    @property
    def domain(self):
        return self.__domain

    @property
    def density(self):
        return self.__density

    @property
    def anchor(self):
        return self.__anchor

    @property
    def monotonicity(self):
        return self.__monotonicity

    @property
    def is_nondecreasing(self):
        return self.__monotonicity.is_nondecreasing()

    @property
    def is_exact(self):
        return self.__is_exact

    @property
    def rigor(self):
        return self.__rigor

    @property
    def name(self):
        return self.__name

    @property
    def tolerance(self):
        """Width to which ∫ φ was certified when Φ was tabulated, 0 for closed forms."""
        return self.__tolerance

    def enclose(self, xs):
        return self.__enclose(as_array(xs))

    def enclosure(self, x):
        lo, hi = self.enclose(as_array([x]))
        return Enclosure(float(lo[0]), float(hi[0]), rigor=self.__rigor)

    def evaluate(self, x):
        xs = as_array(x)
        if self.__point is not None:
            values = self.__point(xs)
        else:
            lo, hi = self.__enclose(xs)
            values = 0.5 * (lo + hi)
        return float(values) if np.ndim(x) == 0 else values

    def __call__(self, x):
        return self.evaluate(x)

    def range_enclosure(self, lefts, rights):
        """Sound enclosures of Φ([lefts[k], rights[k]])."""
        lefts, rights = as_array(lefts), as_array(rights)
        if self.__range_oracle is not None:
            return self.__range_oracle(lefts, rights)
        lo_l, hi_l = self.__enclose(lefts)
        lo_r, hi_r = self.__enclose(rights)
        if self.__monotonicity.is_nondecreasing():
            return lo_l, hi_r
        if self.__monotonicity.is_nonincreasing():
            return lo_r, hi_l
        return np.minimum(lo_l, lo_r), np.maximum(hi_l, hi_r)

    def image(self, cells=IMAGE_CELLS):
        """Enclosure of Φ(domain) as the hull of its ranges over a uniform grid."""
        if self.__domain.is_degenerate:
            cells = 1
        points = np.linspace(self.__domain.a, self.__domain.b, cells + 1)
        lo, hi = self.range_enclosure(points[:-1], points[1:])
        return ClosedInterval(float(np.min(lo)), float(np.max(hi)))

    def increments(self, breakpoints):
        """Brackets and point values of Φ(x_k) - Φ(x_{k-1}) over consecutive breakpoints."""
        breakpoints = as_array(breakpoints)
        lo, hi = self.__enclose(breakpoints)
        points = self.evaluate(breakpoints)
        d_lo = lo[1:] - hi[:-1]
        d_hi = hi[1:] - lo[:-1]
        d_mid = np.diff(points)
        if self.__increment_oracle is not None:
            i_lo, i_hi = self.__increment_oracle(breakpoints[:-1], breakpoints[1:])
            d_lo = np.maximum(d_lo, i_lo)
            d_hi = np.maximum(np.minimum(d_hi, i_hi), d_lo)
            d_mid = np.clip(d_mid, d_lo, d_hi)
        if self.__monotonicity.is_nondecreasing():
            d_lo = np.maximum(d_lo, 0.0)
            d_hi = np.maximum(d_hi, d_lo)
            d_mid = np.maximum(d_mid, 0.0)
        return d_lo, d_mid, d_hi

    def negated(self):
        density = self.__density
        if density is not None:
            density = negate(density)

        def enclose(xs):
            lo, hi = self.__enclose(xs)
            return -hi, -lo

        def range_oracle(lefts, rights):
            lo, hi = self.range_enclosure(lefts, rights)
            return -hi, -lo

        increment_oracle = None
        if self.__increment_oracle is not None:

            def increment_oracle(lefts, rights):
                lo, hi = self.__increment_oracle(lefts, rights)
                return -hi, -lo

        point = self.__point
        return Integrator(
            self.__domain,
            enclose,
            point=(lambda xs: -point(xs)) if point is not None else None,
            range_oracle=range_oracle,
            increment_oracle=increment_oracle,
            monotonicity=self.__monotonicity.negate(),
            is_exact=self.__is_exact,
            density=density,
            anchor=-self.__anchor,
            rigor=self.__rigor,
            name="-{}".format(self.__name),
            tolerance=self.__tolerance,
        )

    def __repr__(self):
        return "Integrator({}, {}, {})".format(
            self.__name, self.__domain.to_list(), self.__monotonicity.name
        )

    @staticmethod
    def identity(domain):
        return Integrator(
            domain,
            lambda xs: (xs, xs),
            point=lambda xs: xs,
            range_oracle=lambda lefts, rights: (lefts, rights),
            is_exact=True,
            name="x",
        )

    @staticmethod
    def from_function(function, monotonicity=Monotonicity.Nondecreasing):
        """Integrator given in closed form by a RealFunction, e.g. x² or x³ + x."""

        def range_oracle(lefts, rights):
            lo, hi = function.ranges(lefts, rights)
            lo, _ = ulp_bracket(lo)
            _, hi = ulp_bracket(hi)
            return lo, hi

        return Integrator(
            function.domain,
            lambda xs: ulp_bracket(function.evaluate(xs)),
            point=function.evaluate,
            range_oracle=range_oracle,
            monotonicity=monotonicity,
            is_exact=function.is_exact,
            rigor=Rigor.of(function.is_certifiable),
            name=function.name,
        )
