from dataclasses import dataclass, field
from enum import Enum
import math


class Rigor(Enum):
    Certified = "certified"
    Heuristic = "heuristic"

    @staticmethod
    def of(certifiable):
        return Rigor.Certified if certifiable else Rigor.Heuristic

    def __and__(self, other):
        if self == Rigor.Certified and other == Rigor.Certified:
            return Rigor.Certified
        return Rigor.Heuristic


@dataclass(frozen=True)
class Enclosure:
    """Two-sided bracket [lo, hi] of an integral.

    `converged` is False when a budget ran out before the requested width was
    reached; the bracket is still valid, only wider than asked for.
    """

    lo: float
    hi: float
    cells: int = 0
    osc_sum: float = math.nan
    rigor: Rigor = Rigor.Certified
    converged: bool = True
    partition: object = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        assert self.lo <= self.hi, "inverted enclosure [{}, {}]".format(self.lo, self.hi)

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def midpoint(self):
        return 0.5 * (self.lo + self.hi)

    @property
    def radius(self):
        return 0.5 * (self.hi - self.lo)

    @property
    def is_certified(self):
        return self.rigor == Rigor.Certified

    def contains(self, value):
        return self.lo <= value <= self.hi

    def overlaps(self, other):
        return self.lo <= other.hi and other.lo <= self.hi

    def negated(self):
        return Enclosure(
            -self.hi,
            -self.lo,
            self.cells,
            self.osc_sum,
            self.rigor,
            self.converged,
            self.partition,
        )

    def to_dict(self):
        return {
            "lo": self.lo,
            "hi": self.hi,
            "cells": self.cells,
            "osc_sum": self.osc_sum,
            "rigor": self.rigor.value,
        }
