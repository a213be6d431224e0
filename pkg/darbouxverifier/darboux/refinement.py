from dataclasses import dataclass
from enum import Enum
import heapq
import itertools
import logging
import numpy as np

from darbouxverifier.aux.errors import ArgumentError
from darbouxverifier.aux.rounding import MERGE_TOLERANCE, ULPS_PER_TERM
from darbouxverifier.darboux.sums import (
    cell_terms,
    cell_terms_between,
    check_nondecreasing,
    rigor_of,
    summarize,
)
from darbouxverifier.partition.partition import Partition, refine

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 2 ** 20


class Strategy(Enum):
    Greedy = "greedy"
    Bulk = "bulk"


class Measure(Enum):
    """What the refinement drives below its target."""

    Oscillation = "oscillation"
    Width = "width"

    def of_sums(self, sums):
        if self == Measure.Oscillation:
            return sums.oscillation_sum
        return sums.certified_upper - sums.certified_lower

    def of_terms(self, terms):
        if self == Measure.Oscillation:
            return terms.oscillation
        return terms.certified_width


@dataclass(frozen=True)
class RefinementOutcome:
    partition: Partition
    sums: object
    value: float
    reached: bool


class AdaptiveRefinement(object):
    """Bisects the cells with the largest contribution until a target is met.

    `greedy` splits one cell at a time from a priority queue. `bulk` splits,
    per round, the largest contributions that together make up
    `bulk_fraction` of the total. Either way the partition never exceeds
    `budget` cells.
    """

    def __init__(
        self,
        strategy=Strategy.Greedy,
        bulk_fraction=0.5,
        budget=DEFAULT_BUDGET,
        ulps_per_term=ULPS_PER_TERM,
        merge_tolerance=MERGE_TOLERANCE,
    ):
        super().__init__()
        if budget < 1:
            raise ArgumentError("budget must be at least one cell, got {}".format(budget))
        if not 0 < bulk_fraction <= 1:
            raise ArgumentError("bulk fraction must lie in (0, 1], got {}".format(bulk_fraction))
        self.__strategy = Strategy(strategy)
        self.__bulk_fraction = bulk_fraction
        self.__budget = int(budget)
        self.__ulps_per_term = ulps_per_term
        self.__merge_tolerance = merge_tolerance

    @property
    def strategy(self):
        return self.__strategy

    @property
    def budget(self):
        return self.__budget

    @property
    def ulps_per_term(self):
        return self.__ulps_per_term

    @property
    def merge_tolerance(self):
        return self.__merge_tolerance

    def with_budget(self, budget):
        if budget is None:
            return self
        return AdaptiveRefinement(
            self.__strategy,
            self.__bulk_fraction,
            budget,
            self.__ulps_per_term,
            self.__merge_tolerance,
        )

    def __call__(self, f, integrator, seed, target, measure=Measure.Oscillation):
        check_nondecreasing(integrator)
        rigor = rigor_of(f, integrator)
        if seed.size > self.__budget:
            raise ArgumentError(
                "seed partition has {} cells, budget is {}".format(seed.size, self.__budget)
            )
        if self.__strategy == Strategy.Greedy:
            outcome = self.__greedy(f, integrator, seed, target, measure, rigor)
        else:
            outcome = self.__bulk(f, integrator, seed, target, measure, rigor)
        logger.debug(
            "%s refinement of %s against %s: %s %.3e after %d cells (target %.3e)",
            self.__strategy.value,
            f.name,
            integrator.name,
            measure.value,
            outcome.value,
            outcome.partition.size,
            target,
        )
        return outcome

    def __min_length(self, base):
        return 2.0 * self.__merge_tolerance * base.length

    def __outcome(self, partition, f, integrator, target, measure, rigor):
        sums = summarize(cell_terms(f, integrator, partition), rigor, self.__ulps_per_term)
        value = measure.of_sums(sums)
        return RefinementOutcome(partition, sums, value, value <= target)

    def __greedy(self, f, integrator, seed, target, measure, rigor):
        base = seed.base
        min_length = self.__min_length(base)
        terms = cell_terms(f, integrator, seed)
        scores = measure.of_terms(terms)
        counter = itertools.count()
        heap = [
            (-s, next(counter), l, r, s)
            for l, r, s in zip(terms.lefts.tolist(), terms.rights.tolist(), scores.tolist())
        ]
        heapq.heapify(heap)
        frozen = []
        total = float(np.sum(scores))
        threshold = target
        n_cells = len(heap)

        def assemble():
            lefts = [cell[2] for cell in heap] + [cell[0] for cell in frozen]
            return Partition(base, np.append(np.sort(lefts), base.b), self.__merge_tolerance)

        while True:
            if total <= threshold:
                outcome = self.__outcome(assemble(), f, integrator, target, measure, rigor)
                if outcome.reached:
                    return outcome
                threshold = target - (outcome.value - total)
            if not heap or n_cells >= self.__budget or heap[0][4] <= 0:
                break
            _, _, l, r, s = heapq.heappop(heap)
            if r - l <= min_length:
                frozen.append((l, r))
                continue
            m = 0.5 * (l + r)
            child = cell_terms_between(f, integrator, [l, m, r])
            child_scores = measure.of_terms(child).tolist()
            heapq.heappush(heap, (-child_scores[0], next(counter), l, m, child_scores[0]))
            heapq.heappush(heap, (-child_scores[1], next(counter), m, r, child_scores[1]))
            total += child_scores[0] + child_scores[1] - s
            n_cells += 1

        return self.__outcome(assemble(), f, integrator, target, measure, rigor)

    def __bulk(self, f, integrator, seed, target, measure, rigor):
        partition = seed
        min_length = self.__min_length(seed.base)
        while True:
            terms = cell_terms(f, integrator, partition)
            sums = summarize(terms, rigor, self.__ulps_per_term)
            value = measure.of_sums(sums)
            if value <= target:
                return RefinementOutcome(partition, sums, value, True)
            room = self.__budget - partition.size
            scores = measure.of_terms(terms)
            splittable = (terms.rights - terms.lefts > min_length) & (scores > 0)
            if room <= 0 or not np.any(splittable):
                return RefinementOutcome(partition, sums, value, False)
            candidates = np.flatnonzero(splittable)
            candidates = candidates[np.argsort(-scores[candidates], kind="stable")]
            cumulative = np.cumsum(scores[candidates])
            count = int(np.searchsorted(cumulative, self.__bulk_fraction * cumulative[-1])) + 1
            chosen = candidates[: min(count, room, candidates.size)]
            logger.debug("bulk round: %d cells, splitting %d", partition.size, chosen.size)
            partition = refine(partition, 0.5 * (terms.lefts[chosen] + terms.rights[chosen]))

    @staticmethod
    def create_from_config(config):
        return AdaptiveRefinement(
            strategy=config["refinement"]["strategy"],
            bulk_fraction=config["refinement"]["bulkFraction"],
            budget=config["refinement"]["budget"],
            ulps_per_term=config["rounding"]["ulpsPerTerm"],
            merge_tolerance=config["rounding"]["mergeTolerance"],
        )
