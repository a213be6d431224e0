"""Outward slack for double-precision sums.

Every accumulated term contributes `ulps_per_term` units in the last place of
its magnitude, and the final result is pushed one more float outwards.
"""

import math
import numpy as np

ULPS_PER_TERM = 4
MERGE_TOLERANCE = 1e-12


def accumulated_slack(terms, ulps_per_term=ULPS_PER_TERM):
    terms = np.asarray(terms, dtype=float)
    if terms.size == 0:
        return 0.0
    per_term = np.sum(np.spacing(np.abs(terms)))
    total = np.spacing(abs(float(np.sum(terms))))
    return float(ulps_per_term * (per_term + total))


def widen_down(x, slack=0.0):
    return float(np.nextafter(x - slack, -math.inf))


def widen_up(x, slack=0.0):
    return float(np.nextafter(x + slack, math.inf))


def outward(lo, hi, slack=0.0):
    return widen_down(lo, slack), widen_up(hi, slack)


def pairwise_sum(terms):
    # numpy reduces float arrays pairwise in index order
    terms = np.asarray(terms, dtype=float)
    return float(np.sum(terms)) if terms.size > 0 else 0.0
