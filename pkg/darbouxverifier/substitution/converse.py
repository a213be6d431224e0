from dataclasses import dataclass
import logging
import numpy as np

from darbouxverifier.aux.errors import BudgetExceeded
from darbouxverifier.aux.rounding import accumulated_slack, pairwise_sum
from darbouxverifier.aux.threading import ordered_map
from darbouxverifier.darboux.integrability import certify_integrable
from darbouxverifier.darboux.sums import cell_terms
from darbouxverifier.partition.interval import ClosedInterval
from darbouxverifier.partition.partition import Partition, refine
from darbouxverifier.stieltjes.integrator import Integrator
from darbouxverifier.substitution.classify import classify, eta_partition
from darbouxverifier.substitution.ledger import substituted_integrand

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConverseReport:
    """Integrability of f on Φ(I) recovered from that of f(Φ)φ on I."""

    integrand_osc_sum: float
    osc_sum: float
    bound: float
    cells: int
    image: ClosedInterval
    slack: float = 0.0

    @property
    def ok(self):
        return self.osc_sum <= self.bound + self.slack

    def to_dict(self):
        return {
            "integrand_osc_sum": self.integrand_osc_sum,
            "osc_sum": self.osc_sum,
            "bound": self.bound,
            "cells": self.cells,
            "image": self.image.to_list(),
            "ok": self.ok,
        }


def converse_check(f, density, integrator, eta, budget=None, refinement=None, workers=1):
    """Builds a partition of Φ(I) on which f has oscillation sum at most
    (1 + 2 M_f + 2 M_f M_φ) η |I|.

    The η-partition of φ gets the minimizer and maximizer of Φ as extra
    breakpoints. The images of its cells between those two points cover Φ(I);
    good cells contribute the partitions certifying f on their images, the
    other cells only their image endpoints.
    """
    interval = integrator.domain
    integrand = substituted_integrand(f, density, integrator)
    identity = Integrator.identity(interval)
    integrand_result = certify_integrable(
        integrand, identity, interval, eta * interval.length, budget, refinement
    )
    integrand_osc = (
        integrand_result.osc_sum
        if integrand_result.is_conclusive
        else integrand_result.best_osc_sum
    )

    partition = eta_partition(density, interval, eta, budget, refinement)
    samples = np.union1d(
        partition.breakpoints, np.linspace(interval.a, interval.b, 1025)
    )
    values = integrator.evaluate(samples)
    x_min, x_max = samples[np.argmin(values)], samples[np.argmax(values)]
    partition = refine(partition, [x_min, x_max])
    classified = classify(partition, density, eta)

    first = int(np.searchsorted(partition.breakpoints, min(x_min, x_max)))
    last = int(np.searchsorted(partition.breakpoints, max(x_min, x_max)))
    images = integrator.evaluate(partition.breakpoints)
    start = max(float(np.min(values)), f.domain.a)
    image = ClosedInterval(start, max(min(float(np.max(values)), f.domain.b), start))
    good = set(classified.good.tolist())

    def image_points(k):
        a, b = sorted((images[k], images[k + 1]))
        cell = ClosedInterval(max(a, image.a), min(max(b, image.a), image.b))
        if k not in good or cell.is_degenerate:
            return np.array([cell.a, cell.b])
        result = certify_integrable(
            f,
            Integrator.identity(cell),
            cell,
            eta * (partition.rights[k] - partition.lefts[k]),
            budget,
            refinement,
        )
        if not result.is_conclusive:
            raise BudgetExceeded(
                "f is not certified on the image {} of cell {}".format(cell.to_list(), k),
                best=result.best_osc_sum,
                cell=k,
            )
        return result.partition.breakpoints

    points = ordered_map(image_points, range(first, last), workers)
    if image.is_degenerate:
        covering = Partition(image, [image.a])
    else:
        covering = Partition(
            image,
            np.clip(np.concatenate([[image.a, image.b]] + list(points)), image.a, image.b),
            partition.merge_tolerance,
        )
    terms = cell_terms(f, Integrator.identity(image), covering)
    m_f, m_phi = f.declared_bound, density.declared_bound
    report = ConverseReport(
        integrand_osc_sum=integrand_osc,
        osc_sum=pairwise_sum(terms.oscillation),
        bound=(1 + 2 * m_f + 2 * m_f * m_phi) * eta * interval.length,
        cells=covering.size,
        image=image,
        slack=accumulated_slack(terms.oscillation),
    )
    logger.debug(
        "converse check: %d cells on %s, oscillation sum %.3e (bound %.3e)",
        covering.size,
        image.to_list(),
        report.osc_sum,
        report.bound,
    )
    return report
