import logging
from dataclasses import dataclass
import numpy as np

from darbouxverifier.aux.errors import ArgumentError, DomainError
from darbouxverifier.aux.utils import Functor, as_array, vectorize_scalar_callable
from darbouxverifier.functions.oracles import (
    OracleKind,
    SampledOracle,
    interval_product,
)
from darbouxverifier.partition.interval import ClosedInterval

logger = logging.getLogger(__name__)

DEFAULT_SAMPLES = 64


@dataclass(frozen=True)
class RangeEnclosure:
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise ArgumentError("empty range enclosure [{}, {}]".format(self.lo, self.hi))

    @property
    def oscillation(self):
        return self.hi - self.lo

    @property
    def magnitude(self):
        return max(abs(self.lo), abs(self.hi))

    def reflected(self):
        return RangeEnclosure(-self.hi, -self.lo)

    def contains(self, y):
        return self.lo <= y <= self.hi

    def to_list(self):
        return [self.lo, self.hi]


class RealFunction(Functor):
    """A bounded function on a closed interval together with a range oracle.

    `evaluate` and `range_oracle` work on numpy arrays. `declared_bound` is a
    bound for |f| on the whole domain; it is derived from the oracle when not
    given and checked against it when given.
    """

    def __init__(
        self,
        evaluate,
        domain,
        range_oracle,
        kind=OracleKind.Exact,
        declared_bound=None,
        closed_form_integral=None,
        name=None,
    ):
        super().__init__()
        self.__evaluate = evaluate
        self.__domain = domain
        self.__range_oracle = range_oracle
        self.__kind = kind
        self.__closed_form_integral = closed_form_integral
        self.__name = name if name is not None else "<function>"

        lo, hi = range_oracle(as_array([domain.a]), as_array([domain.b]))
        observed = float(max(abs(lo[0]), abs(hi[0])))
        if declared_bound is None:
            declared_bound = observed
        elif declared_bound < observed and kind.is_certifiable():
            raise ArgumentError(
                "declared bound {} of {} is below its range magnitude {}".format(
                    declared_bound, self.__name, observed
                )
            )
        self.__declared_bound = float(declared_bound)

    @property
    def domain(self):
        return self.__domain

    @property
    def kind(self):
        return self.__kind

    @property
    def oracle_kind(self):
        return self.__kind

    @property
    def is_exact(self):
        return self.__kind == OracleKind.Exact

    @property
    def is_certifiable(self):
        return self.__kind.is_certifiable()

    @property
    def declared_bound(self):
        return self.__declared_bound

    @property
    def closed_form_integral(self):
        return self.__closed_form_integral

    @property
    def name(self):
        return self.__name

    def evaluate(self, x):
        y = self.__evaluate(as_array(x))
        return float(y) if np.ndim(x) == 0 else y

    def __call__(self, x):
        return self.evaluate(x)

    def ranges(self, lefts, rights):
        """Vectorized range enclosures over the cells [lefts[k], rights[k]]."""
        lefts, rights = as_array(lefts), as_array(rights)
        if lefts.size > 0 and (
            lefts.min() < self.__domain.a or rights.max() > self.__domain.b
        ):
            raise DomainError(
                "{} queried outside of its domain {}".format(
                    self.__name, self.__domain.to_list()
                )
            )
        return self.__range_oracle(lefts, rights)

    def range_enclosure(self, interval):
        lo, hi = self.ranges(as_array([interval.a]), as_array([interval.b]))
        return RangeEnclosure(float(lo[0]), float(hi[0]))

    def oscillations(self, lefts, rights):
        lo, hi = self.ranges(lefts, rights)
        return hi - lo

    def integral(self, interval):
        if self.__closed_form_integral is None:
            return None
        return float(self.__closed_form_integral(interval))

    def __repr__(self):
        return "RealFunction({}, {}, {})".format(
            self.__name, self.__domain.to_list(), self.__kind.value
        )

    @staticmethod
    def from_callable(func, domain, declared_bound=None, n_samples=DEFAULT_SAMPLES, name=None):
        """Wrap an arbitrary callable; its range oracle can only be sampled."""
        evaluate = vectorize_scalar_callable(func)
        return RealFunction(
            evaluate,
            domain,
            SampledOracle(evaluate, n_samples),
            kind=OracleKind.Sampled,
            declared_bound=declared_bound,
            name=name,
        )


def eval_range(f, interval):
    return f.range_enclosure(interval)


def is_positive(f, interval):
    return f.range_enclosure(interval).lo > 0


def is_nonnegative(f, interval):
    return f.range_enclosure(interval).lo >= 0


def compose_with(f, integrator):
    """f∘Φ on the domain of the integrator Φ.

    Range queries pass through a sound enclosure of Φ(J), clipped to the
    domain of f. The result keeps f's Exact oracle only when Φ is a known
    nondecreasing map; any bracketing of Φ makes it Enclosing.
    """
    image = integrator.image()
    tol = 1e-9 * max(1.0, image.length)
    if image.a < f.domain.a - tol or image.b > f.domain.b + tol:
        raise DomainError(
            "range {} of the integrator leaves the domain {} of {}".format(
                image.to_list(), f.domain.to_list(), f.name
            )
        )

    def evaluate(x):
        return f.evaluate(np.clip(integrator.evaluate(x), f.domain.a, f.domain.b))

    def range_oracle(lefts, rights):
        plo, phi = integrator.range_enclosure(lefts, rights)
        plo = np.clip(plo, f.domain.a, f.domain.b)
        phi = np.clip(phi, f.domain.a, f.domain.b)
        return f.ranges(plo, phi)

    if f.kind == OracleKind.Exact and integrator.is_nondecreasing and integrator.is_exact:
        kind = OracleKind.Exact
    elif f.kind.is_certifiable():
        kind = OracleKind.Enclosing
    else:
        kind = OracleKind.Sampled
    return RealFunction(
        evaluate,
        integrator.domain,
        range_oracle,
        kind=kind,
        declared_bound=f.declared_bound,
        name="{}∘{}".format(f.name, integrator.name),
    )


def negate(f):
    cfi = f.closed_form_integral

    def range_oracle(lefts, rights):
        lo, hi = f.ranges(lefts, rights)
        return -hi, -lo

    return RealFunction(
        lambda x: -f.evaluate(x),
        f.domain,
        range_oracle,
        kind=f.kind,
        declared_bound=f.declared_bound,
        closed_form_integral=(lambda j: -cfi(j)) if cfi is not None else None,
        name="-{}".format(f.name),
    )


def reflect(f):
    """y ↦ f(−y) on the mirrored domain."""
    cfi = f.closed_form_integral

    def range_oracle(lefts, rights):
        return f.ranges(-as_array(rights), -as_array(lefts))

    return RealFunction(
        lambda y: f.evaluate(-as_array(y)),
        ClosedInterval(-f.domain.b, -f.domain.a),
        range_oracle,
        kind=f.kind,
        declared_bound=f.declared_bound,
        closed_form_integral=(
            (lambda j: cfi(ClosedInterval(-j.b, -j.a))) if cfi is not None else None
        ),
        name="{}(-y)".format(f.name),
    )


def multiply(f, g):
    if f.domain != g.domain:
        raise DomainError(
            "cannot multiply functions on {} and {}".format(
                f.domain.to_list(), g.domain.to_list()
            )
        )

    def range_oracle(lefts, rights):
        flo, fhi = f.ranges(lefts, rights)
        glo, ghi = g.ranges(lefts, rights)
        return interval_product(flo, fhi, glo, ghi)

    kind = OracleKind.weakest(f.kind, g.kind, OracleKind.Enclosing)
    return RealFunction(
        lambda x: f.evaluate(x) * g.evaluate(x),
        f.domain,
        range_oracle,
        kind=kind,
        declared_bound=f.declared_bound * g.declared_bound,
        name="{}·{}".format(f.name, g.name),
    )


def restrict(f, interval):
    if interval == f.domain:
        return f
    if not f.domain.contains_interval(interval):
        raise DomainError(
            "cannot restrict {} on {} to {}".format(
                f.name, f.domain.to_list(), interval.to_list()
            )
        )
    return RealFunction(
        f.evaluate,
        interval,
        f.ranges,
        kind=f.kind,
        declared_bound=f.declared_bound,
        closed_form_integral=f.closed_form_integral,
        name=f.name,
    )
