from dataclasses import dataclass, asdict
import logging
import numpy as np

from darbouxverifier.aux.errors import ArgumentError, PositivityError, WidthExceeded
from darbouxverifier.aux.rounding import ULPS_PER_TERM, accumulated_slack, pairwise_sum
from darbouxverifier.darboux.integrability import integral_enclosure
from darbouxverifier.darboux.sums import cell_terms, check_nondecreasing
from darbouxverifier.functions.oracles import OracleKind
from darbouxverifier.functions.real_function import compose_with, eval_range, multiply
from darbouxverifier.partition.partition import induced_partition
from darbouxverifier.stieltjes.integrator import Integrator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TransferReport:
    lhs_upper: float
    rhs_upper: float
    lhs_lower: float
    rhs_lower: float
    max_abs_gap: float
    slack: float

    @property
    def ok(self):
        return self.max_abs_gap <= self.slack

    def to_dict(self):
        return dict(asdict(self), ok=self.ok)


@dataclass(frozen=True)
class ReductionReport:
    stieltjes_gap: float
    riemann_gap: float
    osc_term: float
    bound: float
    converse_bound: float
    slack: float
    note: str = "oracle suprema replace sample points"

    @property
    def bound16_ok(self):
        return self.riemann_gap <= self.bound + self.slack

    @property
    def converse_ok(self):
        return self.stieltjes_gap <= self.converse_bound + self.slack

    def to_dict(self):
        return dict(asdict(self), bound16_ok=self.bound16_ok, converse_ok=self.converse_ok)


def bracket_slack(f, integrator, breakpoints):
    """Bound on how far the two sides can drift apart because Φ is only bracketed.

    The induced partition uses point values of Φ, the composite uses its
    range enclosures; f can oscillate inside each bracket, and the point
    increments may have been clipped into their brackets.
    """
    b_lo, b_hi = integrator.range_enclosure(breakpoints, breakpoints)
    f_lo, f_hi = f.ranges(
        np.clip(b_lo, f.domain.a, f.domain.b), np.clip(b_hi, f.domain.a, f.domain.b)
    )
    f_osc = f_hi - f_lo
    _, d_mid, _ = integrator.increments(breakpoints)
    values = np.maximum.accumulate(integrator.evaluate(breakpoints))
    drift = np.abs(d_mid - np.diff(values))
    return pairwise_sum((f_osc[:-1] + f_osc[1:]) * d_mid) + f.declared_bound * pairwise_sum(drift)


def transfer_check(f, integrator, partition, ulps_per_term=ULPS_PER_TERM):
    """Upper and lower sums of f on the induced partition against those of f∘Φ on P."""
    check_nondecreasing(integrator)
    if f.kind != OracleKind.Exact:
        raise ArgumentError("transfer check needs an exact oracle, {} is {}".format(f.name, f.kind.value))
    induced = induced_partition(partition, integrator)
    lhs = cell_terms(f, Integrator.identity(induced.base), induced)
    rhs = cell_terms(compose_with(f, integrator), integrator, partition)
    sums = {
        key: pairwise_sum(terms)
        for key, terms in (
            ("lhs_upper", lhs.upper),
            ("rhs_upper", rhs.upper),
            ("lhs_lower", lhs.lower),
            ("rhs_lower", rhs.lower),
        )
    }
    slack = sum(
        accumulated_slack(terms, ulps_per_term)
        for terms in (lhs.upper, rhs.upper, lhs.lower, rhs.lower)
    )
    slack += bracket_slack(f, integrator, partition.breakpoints)
    return TransferReport(
        max_abs_gap=max(
            abs(sums["lhs_upper"] - sums["rhs_upper"]),
            abs(sums["lhs_lower"] - sums["rhs_lower"]),
        ),
        slack=slack,
        **sums,
    )


def reduce_check(g, density, integrator, partition, ulps_per_term=ULPS_PER_TERM):
    """Compares the Darboux gap of g against Φ with the Riemann gap of g·φ.

    Both directions are checked:
        U(gφ) - L(gφ) <= 2 M_g Σ osc(φ, I_k)|I_k| + U(g, Φ) - L(g, Φ)
        U(g, Φ) - L(g, Φ) <= 2 M_g Σ osc(φ, I_k)|I_k| + U(gφ) - L(gφ)
    with the increments of Φ taken at the unfavourable end of their brackets.
    """
    if eval_range(density, partition.base).lo < 0:
        raise PositivityError("{} takes negative values on {}".format(density.name, partition.base.to_list()))
    if integrator.density is not None and integrator.density is not density:
        raise ArgumentError("{} is not an indefinite integral of {}".format(integrator.name, density.name))
    check_nondecreasing(integrator)

    identity = Integrator.identity(partition.base)
    riemann = cell_terms(multiply(g, density), identity, partition)
    phi_terms = cell_terms(density, identity, partition)

    g_lo, g_hi = g.ranges(partition.lefts, partition.rights)
    d_lo, d_mid, d_hi = integrator.increments(partition.breakpoints)
    g_osc = g_hi - g_lo

    riemann_gap = pairwise_sum(riemann.oscillation)
    osc_term = pairwise_sum(phi_terms.oscillation)
    stieltjes_gap = pairwise_sum(g_osc * d_mid)
    m_g = g.declared_bound

    slack = sum(
        accumulated_slack(terms, ulps_per_term)
        for terms in (riemann.upper, riemann.lower, phi_terms.oscillation, g_osc * d_hi)
    )
    return ReductionReport(
        stieltjes_gap=stieltjes_gap,
        riemann_gap=riemann_gap,
        osc_term=osc_term,
        bound=2.0 * m_g * osc_term + pairwise_sum(g_osc * d_hi),
        converse_bound=2.0 * m_g * osc_term + riemann_gap + pairwise_sum(g_osc * (d_mid - d_lo)),
        slack=slack,
    )


def stieltjes_enclosure(g, integrator, interval=None, tol=1e-6, budget=None, refinement=None):
    interval = interval or integrator.domain
    check_nondecreasing(integrator)
    enclosure = integral_enclosure(g, integrator, interval, tol, budget, refinement=refinement)
    if not enclosure.converged:
        raise WidthExceeded(
            "∫ {} d{} stuck at width {:.3e} > {:.3e}".format(
                g.name, integrator.name, enclosure.width, tol
            ),
            best=enclosure,
        )
    return enclosure
