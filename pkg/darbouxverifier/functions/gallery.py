"""Analytically controlled functions addressable by string id.

Id grammar: ``name`` or ``name:p1,p2,...`` with real parameters, e.g.
``poly:1,-0.5`` (x - 1/2, coefficients from the highest degree down),
``pow:0.5``, ``cos``, ``sin``, ``step:0.5``, ``abs:0.5``, ``const:2``,
``thomae:50`` and ``dirichlet``.
"""

import math
from dataclasses import dataclass, field
import numpy as np
from wrapt import synchronized

from darbouxverifier.aux.errors import DomainError, GalleryError
from darbouxverifier.aux.utils import as_array
from darbouxverifier.functions.oracles import (
    OracleKind,
    PiecewiseMonotoneOracle,
    SampledOracle,
    ThomaeOracle,
    thomae_values,
)
from darbouxverifier.functions.real_function import DEFAULT_SAMPLES, RealFunction

DEFAULT_MAX_DENOMINATOR = 50
DEFAULT_DYADIC_LEVEL = 30


@dataclass(frozen=True)
class GalleryEntry:
    name: str
    parameters: tuple
    function: RealFunction = field(compare=False)
    notes: str = ""

    @property
    def id(self):
        if not self.parameters:
            return self.name
        return "{}:{}".format(self.name, ",".join(repr(p) for p in self.parameters))


def polynomial(coefficients, domain):
    coefficients = np.trim_zeros(as_array(coefficients), "f")
    if coefficients.size == 0:
        coefficients = np.zeros(1)
    derivative = np.polyder(coefficients) if coefficients.size > 1 else np.zeros(1)
    roots = np.roots(derivative) if np.any(derivative != 0) else np.array([])
    real = roots[np.abs(roots.imag) <= 1e-12 * (1 + np.abs(roots.real))].real
    critical = real[(real > domain.a) & (real < domain.b)]
    antiderivative = np.polyint(coefficients)

    def evaluate(x):
        return np.polyval(coefficients, x)

    return RealFunction(
        evaluate,
        domain,
        PiecewiseMonotoneOracle(evaluate, critical),
        closed_form_integral=lambda j: np.polyval(antiderivative, j.b)
        - np.polyval(antiderivative, j.a),
        name="poly:" + ",".join(repr(float(c)) for c in coefficients),
    )


def power(p, domain):
    if not p > 0:
        raise GalleryError("pow needs a positive exponent, got {}".format(p))
    if domain.a < 0:
        raise DomainError("pow:{} is defined on [0, inf), not {}".format(p, domain.to_list()))

    def evaluate(x):
        return np.power(x, p)

    return RealFunction(
        evaluate,
        domain,
        PiecewiseMonotoneOracle(evaluate),
        closed_form_integral=lambda j: (j.b ** (p + 1) - j.a ** (p + 1)) / (p + 1),
        name="pow:{!r}".format(p),
    )


def multiples_in(domain, period, offset=0.0):
    first = math.ceil((domain.a - offset) / period)
    last = math.floor((domain.b - offset) / period)
    return [offset + k * period for k in range(first, last + 1)]


def cosine(domain):
    return RealFunction(
        np.cos,
        domain,
        PiecewiseMonotoneOracle(np.cos, multiples_in(domain, math.pi)),
        closed_form_integral=lambda j: math.sin(j.b) - math.sin(j.a),
        name="cos",
    )


def sine(domain):
    return RealFunction(
        np.sin,
        domain,
        PiecewiseMonotoneOracle(np.sin, multiples_in(domain, math.pi, math.pi / 2)),
        closed_form_integral=lambda j: math.cos(j.a) - math.cos(j.b),
        name="sin",
    )


def step(c, domain):
    """0 for x <= c, 1 for x > c."""

    def evaluate(x):
        return np.where(as_array(x) > c, 1.0, 0.0)

    return RealFunction(
        evaluate,
        domain,
        PiecewiseMonotoneOracle(evaluate, jumps=[(c, 0.0, 1.0)]),
        closed_form_integral=lambda j: max(0.0, j.b - max(j.a, c)),
        name="step:{!r}".format(c),
    )


def absolute(c, domain):
    def evaluate(x):
        return np.abs(as_array(x) - c)

    def antiderivative(x):
        return 0.5 * (x - c) * abs(x - c)

    return RealFunction(
        evaluate,
        domain,
        PiecewiseMonotoneOracle(evaluate, [c] if domain.a < c < domain.b else []),
        closed_form_integral=lambda j: antiderivative(j.b) - antiderivative(j.a),
        name="abs:{!r}".format(c),
    )


def constant(c, domain):
    return polynomial([c], domain)


def thomae(max_denominator, domain):
    if max_denominator < 1 or max_denominator != int(max_denominator):
        raise GalleryError(
            "thomae needs a positive integer denominator cap, got {}".format(max_denominator)
        )
    q_max = int(max_denominator)
    return RealFunction(
        lambda x: thomae_values(x, q_max),
        domain,
        ThomaeOracle(q_max),
        closed_form_integral=lambda j: 0.0,
        name="thomae:{}".format(q_max),
    )


def dirichlet(domain, n_samples=DEFAULT_SAMPLES, level=DEFAULT_DYADIC_LEVEL):
    """Floating-point model of the Dirichlet function.

    Every double is rational, so "rational" is modelled as dyadic of level
    at most `level`: those points get 1, all others 0. Only a Sampled
    oracle is available and no integral exists.
    """
    scale = 2.0 ** level

    def evaluate(x):
        scaled = as_array(x) * scale
        return np.where(scaled == np.rint(scaled), 1.0, 0.0)

    return RealFunction(
        evaluate,
        domain,
        SampledOracle(evaluate, n_samples),
        kind=OracleKind.Sampled,
        declared_bound=1.0,
        name="dirichlet",
    )


NOTES = {
    "poly": "polynomial, coefficients from the highest degree down",
    "pow": "x^p with p > 0 on a nonnegative domain",
    "cos": "cosine, extrema at multiples of pi",
    "sin": "sine, extrema at odd multiples of pi/2",
    "step": "0 up to and including c, 1 after c",
    "abs": "|x - c|",
    "const": "constant function",
    "thomae": "Thomae's function restricted to denominators <= Q",
    "dirichlet": "dyadic indicator, sampled oracle only, not integrable",
}


def parse_id(gallery_id):
    name, _, raw = gallery_id.strip().partition(":")
    if name not in NOTES:
        raise GalleryError("unknown gallery function '{}'".format(gallery_id))
    try:
        parameters = tuple(float(p) for p in raw.split(",")) if raw else ()
    except ValueError:
        raise GalleryError("malformed parameters in gallery id '{}'".format(gallery_id))
    return name, parameters


def expect_parameters(gallery_id, parameters, count):
    if len(parameters) != count:
        raise GalleryError(
            "gallery id '{}' expects {} parameter(s), got {}".format(
                gallery_id, count, len(parameters)
            )
        )


def resolve(
    gallery_id,
    domain,
    n_samples=DEFAULT_SAMPLES,
    max_denominator=DEFAULT_MAX_DENOMINATOR,
    dyadic_level=DEFAULT_DYADIC_LEVEL,
):
    name, parameters = parse_id(gallery_id)
    if name == "poly":
        if not parameters:
            raise GalleryError("poly needs at least one coefficient")
        function = polynomial(parameters, domain)
    elif name == "pow":
        expect_parameters(gallery_id, parameters, 1)
        function = power(parameters[0], domain)
    elif name == "cos":
        expect_parameters(gallery_id, parameters, 0)
        function = cosine(domain)
    elif name == "sin":
        expect_parameters(gallery_id, parameters, 0)
        function = sine(domain)
    elif name == "step":
        expect_parameters(gallery_id, parameters, 1)
        function = step(parameters[0], domain)
    elif name == "abs":
        expect_parameters(gallery_id, parameters, 1)
        function = absolute(parameters[0], domain)
    elif name == "const":
        expect_parameters(gallery_id, parameters, 1)
        function = constant(parameters[0], domain)
    elif name == "thomae":
        if len(parameters) > 1:
            expect_parameters(gallery_id, parameters, 1)
        q_max = parameters[0] if parameters else max_denominator
        function = thomae(q_max, domain)
    else:
        expect_parameters(gallery_id, parameters, 0)
        function = dirichlet(domain, n_samples, dyadic_level)
    return GalleryEntry(name, parameters, function, NOTES[name])


class Gallery(object):
    """Resolves gallery ids with configured defaults and caches the results."""

    def __init__(
        self,
        n_samples=DEFAULT_SAMPLES,
        max_denominator=DEFAULT_MAX_DENOMINATOR,
        dyadic_level=DEFAULT_DYADIC_LEVEL,
    ):
        super().__init__()
        self.n_samples = n_samples
        self.max_denominator = max_denominator
        self.dyadic_level = dyadic_level
        self.__cache = {}

    @synchronized
    def entry(self, gallery_id, domain):
        key = (gallery_id, domain)
        if key not in self.__cache:
            self.__cache[key] = resolve(
                gallery_id,
                domain,
                self.n_samples,
                self.max_denominator,
                self.dyadic_level,
            )
        return self.__cache[key]

    def __call__(self, gallery_id, domain):
        return self.entry(gallery_id, domain).function

    @staticmethod
    def create_from_config(config):
        return Gallery(
            n_samples=config["oracle"]["samples"],
            max_denominator=config["gallery"]["maxDenominator"],
            dyadic_level=config["gallery"]["dyadicLevel"],
        )
