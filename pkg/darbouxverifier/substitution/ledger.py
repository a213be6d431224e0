from dataclasses import dataclass
import logging
import numpy as np

from darbouxverifier.aux.errors import BudgetExceeded
from darbouxverifier.aux.rounding import ULPS_PER_TERM, accumulated_slack, pairwise_sum
from darbouxverifier.aux.threading import ordered_map
from darbouxverifier.darboux.integrability import certify_integrable
from darbouxverifier.darboux.sums import cell_terms
from darbouxverifier.functions.real_function import compose_with, multiply
from darbouxverifier.partition.interval import ClosedInterval, OrientedInterval
from darbouxverifier.partition.partition import Partition, concatenate
from darbouxverifier.stieltjes.integrator import Integrator
from darbouxverifier.substitution.oriented import image_points, signed_integral

logger = logging.getLogger(__name__)

CELL_TOLERANCE_FRACTION = 0.1


def substituted_integrand(f, density, integrator):
    """f(Φ)φ on the domain of Φ."""
    return multiply(compose_with(f, integrator), density)


@dataclass(frozen=True)
class VerificationPartition:
    """The classified η-partition with every good cell refined for f(Φ)φ.

    `pieces[k]` is the sub-partition of cell k; bounded and undulating cells
    stay whole.
    """

    partition: Partition
    classified: object
    pieces: tuple
    integrand: object


def build_verification_partition(
    f, density, integrator, classified, eta, budget=None, refinement=None, workers=1
):
    integrand = substituted_integrand(f, density, integrator)
    coarse = classified.partition
    good = set(classified.good.tolist())

    def piece(k):
        cell = ClosedInterval(coarse.lefts[k], coarse.rights[k])
        if k not in good:
            return Partition(cell, [cell.a, cell.b])
        result = certify_integrable(
            integrand,
            Integrator.identity(cell),
            cell,
            0.5 * eta * cell.length,
            budget,
            refinement,
        )
        if not result.is_conclusive:
            raise BudgetExceeded(
                "cell {} {}: oscillation sum of {} stuck at {:.3e} > {:.3e}".format(
                    k, cell.to_list(), integrand.name, result.best_osc_sum, result.epsilon
                ),
                best=result.best_osc_sum,
                cell=k,
            )
        return result.partition

    pieces = tuple(ordered_map(piece, range(coarse.size), workers))
    partition = concatenate(pieces) if pieces else coarse
    logger.debug(
        "verification partition: %d coarse cells (%d good), %d refined cells",
        coarse.size,
        len(good),
        partition.size,
    )
    return VerificationPartition(partition, classified, pieces, integrand)


@dataclass(frozen=True)
class LedgerRow:
    eq: str
    lhs: float
    rhs: float
    slack: float = 0.0

    @property
    def ok(self):
        return self.lhs <= self.rhs + self.slack

    def to_dict(self):
        return {"eq": self.eq, "lhs": self.lhs, "rhs": self.rhs, "ok": self.ok}


@dataclass(frozen=True)
class BoundLedger:
    eta: float
    rows: tuple
    good: int = 0
    bounded: int = 0
    undulating: int = 0

    def row(self, eq):
        for row in self.rows:
            if row.eq == eq:
                return row
        raise KeyError(eq)

    @property
    def eta_sq_bound(self):
        return self.row("18").lhs, self.row("18").rhs

    @property
    def chebyshev(self):
        return self.row("28").lhs, self.row("28").rhs

    @property
    def aggregate(self):
        return self.row("31").lhs, self.row("31").rhs

    @property
    def all_ok(self):
        return all(row.ok for row in self.rows)

    def to_dict(self):
        return {
            "eta": self.eta,
            "classes": {"G": self.good, "B": self.bounded, "U": self.undulating},
            "rows": [row.to_dict() for row in self.rows],
            "all_ok": self.all_ok,
        }


def per_cell(values, starts):
    if starts.size == 0:
        return np.zeros(0)
    return np.add.reduceat(values, starts)


def class_sum(values, indices):
    return pairwise_sum(values[indices])


def verify_ledger(
    f,
    density,
    integrator,
    verification,
    budget=None,
    refinement=None,
    workers=1,
    ulps_per_term=ULPS_PER_TERM,
):
    classified = verification.classified
    coarse = classified.partition
    fine = verification.partition
    eta = classified.eta
    total_length = coarse.base.length
    lengths = coarse.lengths()
    m_f = f.declared_bound
    m_phi = density.declared_bound
    good, bounded, undulating = classified.good, classified.bounded, classified.undulating

    identity = Integrator.identity(coarse.base)
    density_osc = cell_terms(density, identity, coarse).oscillation
    terms = cell_terms(verification.integrand, identity, fine)
    starts = np.searchsorted(fine.breakpoints, coarse.breakpoints)[:-1]
    osc = per_cell(terms.oscillation, starts)
    upper = per_cell(terms.upper, starts)

    lo, hi = integrator.enclose(coarse.breakpoints)
    images = image_points(integrator, coarse.breakpoints, f.domain)
    radii = 0.5 * (hi - lo)
    image_slack = m_f * (radii[:-1] + radii[1:])

    def image_integral(k):
        return signed_integral(
            f,
            OrientedInterval(images[k], images[k + 1]),
            CELL_TOLERANCE_FRACTION * eta * lengths[k],
            budget,
            refinement,
        )

    integrals = ordered_map(image_integral, range(coarse.size), workers)
    int_lo = np.array([e.lo for e in integrals], dtype=float)
    int_hi = np.array([e.hi for e in integrals], dtype=float)
    gaps = np.maximum(np.abs(int_lo - upper), np.abs(int_hi - upper))

    d_lo, _, d_hi = integrator.increments(coarse.breakpoints)
    stretch = np.maximum(np.abs(d_lo), np.abs(d_hi)) / lengths if coarse.size else np.zeros(0)

    def slack(*arrays):
        return sum(accumulated_slack(a, ulps_per_term) for a in arrays)

    eta_i = eta * total_length
    total_osc = pairwise_sum(terms.oscillation)
    total_upper = pairwise_sum(terms.upper)
    approximation = max(
        abs(pairwise_sum(int_lo) - total_upper), abs(pairwise_sum(int_hi) - total_upper)
    )
    rows = (
        LedgerRow("18", pairwise_sum(density_osc), eta * eta_i, slack(density_osc)),
        LedgerRow("19", class_sum(osc, good), eta_i, slack(osc[good])),
        LedgerRow(
            "20",
            class_sum(gaps, good),
            eta_i,
            slack(gaps[good], upper[good]) + class_sum(image_slack, good),
        ),
        LedgerRow(
            "21",
            float(np.max(stretch)) if stretch.size else 0.0,
            m_phi,
            16 * float(np.spacing(m_phi)),
        ),
        LedgerRow("26", class_sum(osc, bounded), 2 * m_f * eta_i, slack(osc[bounded])),
        LedgerRow(
            "27",
            class_sum(gaps, bounded),
            2 * m_f * eta_i,
            slack(gaps[bounded], upper[bounded]) + class_sum(image_slack, bounded),
        ),
        LedgerRow("28", class_sum(lengths, undulating), eta_i, slack(lengths)),
        LedgerRow(
            "29", class_sum(osc, undulating), 2 * m_f * m_phi * eta_i, slack(osc[undulating])
        ),
        LedgerRow(
            "30",
            class_sum(gaps, undulating),
            2 * m_f * m_phi * eta_i,
            slack(gaps[undulating], upper[undulating]) + class_sum(image_slack, undulating),
        ),
        LedgerRow(
            "31",
            total_osc,
            (1 + 2 * m_f + 2 * m_f * m_phi) * eta_i,
            slack(terms.oscillation),
        ),
        LedgerRow(
            "34",
            approximation,
            (1 + 3 * m_f + 3 * m_f * m_phi) * eta_i,
            slack(int_lo, int_hi, terms.upper) + pairwise_sum(image_slack),
        ),
    )
    ledger = BoundLedger(eta, rows, good.size, bounded.size, undulating.size)
    failed = [row.eq for row in rows if not row.ok]
    if failed:
        logger.warning("ledger rows %s fail for η = %g", ", ".join(failed), eta)
    return ledger
