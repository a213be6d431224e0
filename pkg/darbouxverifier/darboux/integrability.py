from dataclasses import dataclass
import logging

from darbouxverifier.aux.enclosure import Enclosure, Rigor
from darbouxverifier.aux.errors import ArgumentError, DomainError
from darbouxverifier.aux.rounding import outward
from darbouxverifier.darboux.refinement import AdaptiveRefinement, Measure
from darbouxverifier.darboux.sums import rigor_of
from darbouxverifier.partition.partition import Partition

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntegrabilityCertificate:
    """A partition on which the oscillation sum of f against Φ is at most ε."""

    partition: Partition
    osc_sum: float
    epsilon: float
    rigor: Rigor

    @property
    def is_conclusive(self):
        return True

    def to_dict(self):
        return {
            "status": "certificate",
            "epsilon": self.epsilon,
            "osc_sum": self.osc_sum,
            "cells": self.partition.size,
            "rigor": self.rigor.value,
        }


@dataclass(frozen=True)
class Inconclusive:
    """The budget ran out; `best_osc_sum` is the smallest sum reached."""

    partition: Partition
    best_osc_sum: float
    epsilon: float
    rigor: Rigor

    @property
    def is_conclusive(self):
        return False

    def to_dict(self):
        return {
            "status": "inconclusive",
            "epsilon": self.epsilon,
            "osc_sum": self.best_osc_sum,
            "cells": self.partition.size,
            "rigor": self.rigor.value,
        }


def check_interval(f, integrator, interval):
    for name, domain in (("f", f.domain), ("Φ", integrator.domain)):
        if not domain.contains_interval(interval):
            raise DomainError(
                "{} is defined on {}, not on all of {}".format(
                    name, domain.to_list(), interval.to_list()
                )
            )


def seed_partition(interval, seed, merge_tolerance):
    if seed is None:
        return Partition(interval, [interval.a, interval.b], merge_tolerance)
    if seed.base != interval:
        raise ArgumentError(
            "seed partition of {} does not cover {}".format(
                seed.base.to_list(), interval.to_list()
            )
        )
    return seed


def certify_integrable(f, integrator, interval, epsilon, budget=None, refinement=None):
    if not epsilon > 0:
        raise ArgumentError("ε must be positive, got {}".format(epsilon))
    if budget is not None and budget < 1:
        raise ArgumentError("budget must be at least one cell, got {}".format(budget))
    check_interval(f, integrator, interval)
    refinement = (refinement or AdaptiveRefinement()).with_budget(budget)
    outcome = refinement(
        f,
        integrator,
        seed_partition(interval, None, refinement.merge_tolerance),
        epsilon,
        Measure.Oscillation,
    )
    if outcome.reached:
        return IntegrabilityCertificate(
            outcome.partition, outcome.value, epsilon, outcome.sums.rigor
        )
    logger.info(
        "no certificate for %s within %d cells, best oscillation sum %.3e",
        f.name,
        refinement.budget,
        outcome.value,
    )
    return Inconclusive(outcome.partition, outcome.value, epsilon, outcome.sums.rigor)


def integral_enclosure(
    f, integrator=None, interval=None, tol=1e-6, budget=None, seed=None, refinement=None
):
    """Enclosure of ∫_I f dΦ of width at most `tol`.

    The result has `converged` set to False when the budget ran out first; its
    bracket is then the narrowest one reached.
    """
    interval = interval or f.domain
    if integrator is None:
        # stieltjes builds on this module, so the identity is resolved late
        from darbouxverifier.stieltjes.integrator import Integrator

        integrator = Integrator.identity(interval)
    if not tol > 0:
        raise ArgumentError("tolerance must be positive, got {}".format(tol))
    if budget is not None and budget < 1:
        raise ArgumentError("budget must be at least one cell, got {}".format(budget))
    check_interval(f, integrator, interval)
    if interval.is_degenerate:
        lo, hi = outward(0.0, 0.0)
        return Enclosure(
            lo,
            hi,
            cells=0,
            osc_sum=0.0,
            rigor=rigor_of(f, integrator),
            partition=Partition(interval, [interval.a]),
        )
    refinement = (refinement or AdaptiveRefinement()).with_budget(budget)
    outcome = refinement(
        f,
        integrator,
        seed_partition(interval, seed, refinement.merge_tolerance),
        tol,
        Measure.Width,
    )
    if not outcome.reached:
        logger.info(
            "enclosure of ∫ %s d%s stuck at width %.3e after %d cells",
            f.name,
            integrator.name,
            outcome.value,
            outcome.partition.size,
        )
    return outcome.sums.enclosure(converged=outcome.reached, partition=outcome.partition)
