from dataclasses import dataclass, field
import logging

from darbouxverifier.aux.enclosure import Enclosure
from darbouxverifier.aux.errors import BudgetExceeded, WidthExceeded
from darbouxverifier.aux.rounding import outward
from darbouxverifier.darboux.integrability import integral_enclosure
from darbouxverifier.functions.real_function import restrict
from darbouxverifier.partition.interval import OrientedInterval
from darbouxverifier.stieltjes.indefinite import DEFAULT_GRID_CELLS, build_indefinite_integral
from darbouxverifier.stieltjes.integrator import Integrator
from darbouxverifier.substitution.classify import classify, eta_partition
from darbouxverifier.substitution.ledger import (
    build_verification_partition,
    substituted_integrand,
    verify_ledger,
)
from darbouxverifier.substitution.oriented import image_points, oriented_integral

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE_FRACTION = 0.25


def integrator_tolerance(tol, m_f, tolerance_fraction=DEFAULT_TOLERANCE_FRACTION):
    """Width allowed for Φ(b): M_f times it is what the left side inherits."""
    return tolerance_fraction * tol / max(1.0, m_f)


def fits_integrator_share(integrator, m_f, tol, tolerance_fraction=DEFAULT_TOLERANCE_FRACTION):
    """Whether a prebuilt Φ was tabulated finely enough to be reused for tolerance `tol`."""
    return integrator.tolerance <= integrator_tolerance(tol, m_f, tolerance_fraction)


def default_eta(tol, m_f, m_phi, length):
    """Largest η with (1 + 3 M_f + 3 M_f M_φ) η |I| <= tol."""
    return tol / ((1 + 3 * m_f + 3 * m_f * m_phi) * max(length, 1e-300))


@dataclass(frozen=True)
class SubstitutionVerdict:
    lhs: Enclosure
    rhs: Enclosure
    ledger: object = None
    eta: float = None
    notes: tuple = ()
    integrator: object = field(default=None, compare=False, repr=False)

    @property
    def overlap(self):
        return self.lhs.overlaps(self.rhs)

    @property
    def max_width(self):
        return max(self.lhs.width, self.rhs.width)

    @property
    def is_certified(self):
        return (
            self.overlap
            and self.lhs.is_certified
            and self.rhs.is_certified
            and (self.ledger is None or self.ledger.all_ok)
        )

    def to_dict(self):
        return {
            "lhs": self.lhs.to_dict(),
            "rhs": self.rhs.to_dict(),
            "overlap": self.overlap,
            "max_width": self.max_width,
            "eta": self.eta,
            "ledger": self.ledger.to_dict() if self.ledger is not None else None,
            "notes": list(self.notes),
        }


def substitution_ledger(f, density, integrator, eta, budget=None, refinement=None, workers=1):
    """Runs the η-machinery on I: partition, classify, refine, check every bound."""
    interval = integrator.domain
    partition = eta_partition(density, interval, eta, budget, refinement)
    classified = classify(partition, density, eta)
    verification = build_verification_partition(
        f, density, integrator, classified, eta, budget, refinement, workers
    )
    return verify_ledger(f, density, integrator, verification, budget, refinement, workers)


def change_of_variable(
    f,
    density,
    interval=None,
    anchor=0.0,
    eta=None,
    tol=1e-6,
    budget=None,
    refinement=None,
    grid_cells=DEFAULT_GRID_CELLS,
    tolerance_fraction=DEFAULT_TOLERANCE_FRACTION,
    with_ledger=True,
    workers=1,
    integrator=None,
):
    """Encloses both sides of ∫_[Φ(a), Φ(b)] f = ∫_I f(Φ)φ independently.

    Φ is built from φ unless a prebuilt `integrator` is passed and its end
    bracket fits the share of `tol` reserved for it (see `fits_integrator_share`).
    """
    interval = interval or density.domain
    density = restrict(density, interval)
    m_f = f.declared_bound
    if integrator is not None and not fits_integrator_share(integrator, m_f, tol, tolerance_fraction):
        logger.info("rebuilding %s, its end bracket is too wide for M_f = %g", integrator.name, m_f)
        integrator = None
    if integrator is None:
        integrator = build_indefinite_integral(
            density,
            interval.a,
            anchor,
            grid_cells,
            integrator_tolerance(tol, m_f, tolerance_fraction),
            budget,
            refinement,
        )
    integrand = substituted_integrand(f, density, integrator)

    end = integrator.enclosure(interval.b)
    end_point = float(image_points(integrator, [interval.b], f.domain)[0])
    core = oriented_integral(
        f,
        OrientedInterval(integrator.anchor, end_point),
        (1 - tolerance_fraction) * tol,
        budget,
        refinement,
    )
    lo, hi = outward(core.lo, core.hi, m_f * end.radius)
    lhs = Enclosure(lo, hi, core.cells, core.osc_sum, core.rigor & end.rigor)

    rhs = integral_enclosure(
        integrand,
        Integrator.identity(interval),
        interval,
        tol,
        budget,
        refinement=refinement,
    )
    if not rhs.converged:
        raise WidthExceeded(
            "∫ f(Φ)φ stuck at width {:.3e} > {:.3e}".format(rhs.width, tol), best=rhs
        )

    notes = []
    ledger = None
    if with_ledger:
        explicit = eta is not None
        if not explicit:
            eta = default_eta(tol, m_f, density.declared_bound, interval.length)
        try:
            ledger = substitution_ledger(f, density, integrator, eta, budget, refinement, workers)
        except BudgetExceeded as e:
            if explicit:
                raise
            logger.warning("no ledger for η = %g: %s", eta, e)
            notes.append("ledger skipped: {}".format(e))

    verdict = SubstitutionVerdict(lhs, rhs, ledger, eta, tuple(notes), integrator)
    if not verdict.overlap:
        logger.warning(
            "enclosures [%r, %r] and [%r, %r] do not overlap", lhs.lo, lhs.hi, rhs.lo, rhs.hi
        )
    return verdict
