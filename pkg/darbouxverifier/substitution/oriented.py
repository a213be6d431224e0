import numpy as np

from darbouxverifier.aux.enclosure import Enclosure, Rigor
from darbouxverifier.aux.errors import DomainError, WidthExceeded
from darbouxverifier.aux.rounding import outward
from darbouxverifier.darboux.integrability import integral_enclosure
from darbouxverifier.stieltjes.integrator import Integrator


def image_points(integrator, xs, domain):
    """Point values of Φ at `xs`, moved into `domain` as far as their brackets allow.

    A moved value stays inside its bracket, so it is no farther from Φ(x)
    than the bracket radius.
    """
    lo, hi = integrator.enclose(xs)
    points = np.asarray(integrator.evaluate(np.asarray(xs, dtype=float)), dtype=float)
    a = np.maximum(lo, domain.a)
    b = np.minimum(hi, domain.b)
    inside = a <= b
    return np.where(inside, np.clip(points, a, np.maximum(a, b)), points)


def signed_integral(f, oriented, tol, budget=None, refinement=None):
    """∫ of f along `oriented`, negated when it runs right to left.

    Never raises on an exhausted budget; check `converged` instead.
    """
    carrier = oriented.carrier
    if not f.domain.contains_interval(carrier):
        raise DomainError(
            "{} is defined on {}, not on all of {}".format(
                f.name, f.domain.to_list(), carrier.to_list()
            )
        )
    if oriented.is_degenerate:
        lo, hi = outward(0.0, 0.0)
        return Enclosure(lo, hi, cells=0, osc_sum=0.0, rigor=Rigor.of(f.is_certifiable))
    enclosure = integral_enclosure(
        f, Integrator.identity(carrier), carrier, tol, budget, refinement=refinement
    )
    return enclosure if oriented.sign > 0 else enclosure.negated()


def oriented_integral(f, oriented, tol=1e-6, budget=None, refinement=None):
    enclosure = signed_integral(f, oriented, tol, budget, refinement)
    if not enclosure.converged:
        raise WidthExceeded(
            "∫ {} over {} stuck at width {:.3e} > {:.3e}".format(
                f.name, oriented.to_list(), enclosure.width, tol
            ),
            best=enclosure,
        )
    return enclosure
