from dataclasses import dataclass, field
import logging
import numpy as np

from darbouxverifier.aux.enclosure import Rigor
from darbouxverifier.aux.errors import ArgumentError, BudgetExceeded
from darbouxverifier.darboux.integrability import certify_integrable
from darbouxverifier.functions.real_function import RangeEnclosure
from darbouxverifier.partition.partition import Partition
from darbouxverifier.stieltjes.integrator import Integrator

logger = logging.getLogger(__name__)

GOOD = "G"
BOUNDED = "B"
UNDULATING = "U"


def eta_partition(density, interval, eta, budget=None, refinement=None):
    """Partition of `interval` with Σ osc(φ, I_k)|I_k| <= η²|I|."""
    if not eta > 0:
        raise ArgumentError("η must be positive, got {}".format(eta))
    if interval.is_degenerate:
        return Partition(interval, [interval.a])
    result = certify_integrable(
        density,
        Integrator.identity(interval),
        interval,
        eta * eta * interval.length,
        budget,
        refinement,
    )
    if not result.is_conclusive:
        raise BudgetExceeded(
            "no η-partition for {} with η = {}: best oscillation sum {:.3e} > {:.3e}".format(
                density.name, eta, result.best_osc_sum, result.epsilon
            ),
            best=result.best_osc_sum,
        )
    logger.debug(
        "η-partition of %s: %d cells, oscillation sum %.3e",
        density.name,
        result.partition.size,
        result.osc_sum,
    )
    return result.partition


@dataclass(frozen=True)
class ClassifiedPartition:
    """Cells of an η-partition split by the behaviour of φ on them.

    good: φ keeps a strict sign. bounded: |φ| <= η. undulating: neither.
    Index sets are zero-based cell indices.
    """

    partition: Partition
    eta: float
    good: np.ndarray
    bounded: np.ndarray
    undulating: np.ndarray
    lo: np.ndarray = field(repr=False)
    hi: np.ndarray = field(repr=False)
    rigor: Rigor = Rigor.Certified

    @property
    def ranges(self):
        return [RangeEnclosure(float(l), float(h)) for l, h in zip(self.lo, self.hi)]

    @property
    def labels(self):
        labels = np.full(self.partition.size, UNDULATING)
        labels[self.good] = GOOD
        labels[self.bounded] = BOUNDED
        return labels.tolist()

    def lengths_of(self, indices):
        return self.partition.lengths()[indices]

    def to_dict(self):
        return {
            "eta": self.eta,
            "cells": self.partition.size,
            "good": self.good.tolist(),
            "bounded": self.bounded.tolist(),
            "undulating": self.undulating.tolist(),
            "rigor": self.rigor.value,
        }


def classify(partition, density, eta):
    lo, hi = density.ranges(partition.lefts, partition.rights)
    good = (lo > 0) | (hi < 0)
    bounded = ~good & (np.maximum(np.abs(lo), np.abs(hi)) <= eta)
    undulating = ~good & ~bounded
    rigor = Rigor.of(density.is_certifiable)
    if rigor == Rigor.Heuristic:
        logger.warning("classification of %s relies on a sampled oracle", density.name)
    return ClassifiedPartition(
        partition,
        eta,
        np.flatnonzero(good),
        np.flatnonzero(bounded),
        np.flatnonzero(undulating),
        lo,
        hi,
        rigor,
    )
