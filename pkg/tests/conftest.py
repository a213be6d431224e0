import numpy as np
import pytest

from darbouxverifier.darboux.refinement import AdaptiveRefinement, Strategy
from darbouxverifier.functions.gallery import Gallery
from darbouxverifier.partition.interval import ClosedInterval


@pytest.fixture
def unit():
    return ClosedInterval(0.0, 1.0)


@pytest.fixture
def gallery():
    return Gallery()


@pytest.fixture
def function(gallery):
    """Gallery function on [a, b], e.g. `function("poly:1,0")`."""

    def make(gallery_id, a=0.0, b=1.0):
        return gallery(gallery_id, ClosedInterval(a, b))

    return make


@pytest.fixture
def bulk():
    return AdaptiveRefinement(strategy=Strategy.Bulk, budget=2 ** 16)


@pytest.fixture
def rng():
    return np.random.default_rng(20240519)
