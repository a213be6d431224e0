from dataclasses import dataclass
import numpy as np

from darbouxverifier.aux.errors import MonotonicityError
from darbouxverifier.aux.rounding import (
    ULPS_PER_TERM,
    accumulated_slack,
    pairwise_sum,
    widen_down,
    widen_up,
)
from darbouxverifier.aux.enclosure import Enclosure, Rigor


@dataclass(frozen=True)
class CellTerms:
    """Per-cell Darboux terms of f against Φ on one partition.

    `upper`/`lower` use the point increments of Φ. The `certified_*` terms are
    taken at the adversarial end of the bracket of each increment, so that
    Σ certified_lower <= ∫ f dΦ <= Σ certified_upper holds even when Φ is only
    known up to an enclosure.
    """

    lefts: np.ndarray
    rights: np.ndarray
    sup: np.ndarray
    inf: np.ndarray
    increments: np.ndarray
    upper: np.ndarray
    lower: np.ndarray
    certified_upper: np.ndarray
    certified_lower: np.ndarray

    @property
    def oscillation(self):
        return (self.sup - self.inf) * self.increments

    @property
    def certified_width(self):
        return self.certified_upper - self.certified_lower

    def __len__(self):
        return self.lefts.size


@dataclass(frozen=True)
class DarbouxSums:
    upper: float
    lower: float
    oscillation_sum: float
    partition_size: int
    certified_lower: float
    certified_upper: float
    rigor: Rigor

    @property
    def gap(self):
        return self.upper - self.lower

    def enclosure(self, converged=True, partition=None):
        return Enclosure(
            self.certified_lower,
            self.certified_upper,
            cells=self.partition_size,
            osc_sum=self.oscillation_sum,
            rigor=self.rigor,
            converged=converged,
            partition=partition,
        )

    def to_dict(self):
        return {
            "upper": self.upper,
            "lower": self.lower,
            "osc_sum": self.oscillation_sum,
            "cells": self.partition_size,
            "certified": [self.certified_lower, self.certified_upper],
            "rigor": self.rigor.value,
        }


def check_nondecreasing(integrator):
    if not integrator.is_nondecreasing:
        raise MonotonicityError(
            "Darboux sums need a nondecreasing integrator, {} is {}".format(
                integrator.name, integrator.monotonicity.name
            )
        )


def cell_terms_between(f, integrator, breakpoints):
    breakpoints = np.asarray(breakpoints, dtype=float)
    lefts, rights = breakpoints[:-1], breakpoints[1:]
    inf, sup = f.ranges(lefts, rights)
    d_lo, d_mid, d_hi = integrator.increments(breakpoints)
    return CellTerms(
        lefts=lefts,
        rights=rights,
        sup=sup,
        inf=inf,
        increments=d_mid,
        upper=sup * d_mid,
        lower=inf * d_mid,
        certified_upper=np.maximum(sup * d_lo, sup * d_hi),
        certified_lower=np.minimum(inf * d_lo, inf * d_hi),
    )


def cell_terms(f, integrator, partition):
    check_nondecreasing(integrator)
    return cell_terms_between(f, integrator, partition.breakpoints)


def rigor_of(f, integrator):
    return Rigor.of(f.is_certifiable) & integrator.rigor


def summarize(terms, rigor, ulps_per_term=ULPS_PER_TERM):
    lo = widen_down(
        pairwise_sum(terms.certified_lower),
        accumulated_slack(terms.certified_lower, ulps_per_term),
    )
    hi = widen_up(
        pairwise_sum(terms.certified_upper),
        accumulated_slack(terms.certified_upper, ulps_per_term),
    )
    return DarbouxSums(
        upper=pairwise_sum(terms.upper),
        lower=pairwise_sum(terms.lower),
        oscillation_sum=pairwise_sum(terms.oscillation),
        partition_size=len(terms),
        certified_lower=lo,
        certified_upper=hi,
        rigor=rigor,
    )


def darboux_sums(f, integrator, partition, ulps_per_term=ULPS_PER_TERM):
    terms = cell_terms(f, integrator, partition)
    return summarize(terms, rigor_of(f, integrator), ulps_per_term)


def upper_sum(f, integrator, partition):
    return pairwise_sum(cell_terms(f, integrator, partition).upper)


def lower_sum(f, integrator, partition):
    return pairwise_sum(cell_terms(f, integrator, partition).lower)


def oscillation_sum(f, integrator, partition):
    return pairwise_sum(cell_terms(f, integrator, partition).oscillation)
