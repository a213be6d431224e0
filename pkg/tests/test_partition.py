import math
import numpy as np
import pytest

from darbouxverifier.aux.errors import ArgumentError, BaseMismatch, DomainError, MonotonicityError
from darbouxverifier.partition import (
    ClosedInterval,
    OrientedInterval,
    Partition,
    common_refinement,
    concatenate,
    induced_partition,
    mesh,
    refine,
    uniform_partition,
)
from darbouxverifier.stieltjes.integrator import Integrator, Monotonicity


def test_interval_validation():
    with pytest.raises(ArgumentError):
        ClosedInterval(1, 0)
    assert ClosedInterval(2, 2).is_degenerate
    assert ClosedInterval(0, 1).split(0.25) == (ClosedInterval(0, 0.25), ClosedInterval(0.25, 1))


def test_oriented_interval():
    j = OrientedInterval(1, 0)
    assert j.sign == -1
    assert j.carrier == ClosedInterval(0, 1)
    assert j.reversed().sign == 1
    assert OrientedInterval(0.5, 0.5).is_degenerate


@pytest.mark.parametrize(
    "interval, n, expected",
    [
        (ClosedInterval(0, 1), 1, [0, 1]),
        (ClosedInterval(0, 1), 2, [0, 0.5, 1]),
        (ClosedInterval(0, math.pi), 4, [0, math.pi / 4, math.pi / 2, 3 * math.pi / 4, math.pi]),
    ],
)
def test_uniform_partition(interval, n, expected):
    p = uniform_partition(interval, n)
    assert p.size == n
    assert p.to_list() == pytest.approx(expected)


@pytest.mark.parametrize("n", [0, -3, 2.5])
def test_uniform_partition_needs_positive_count(unit, n):
    with pytest.raises(ArgumentError):
        uniform_partition(unit, n)


def test_refine(unit):
    p = Partition(unit, [0, 1])
    assert refine(p, [0.5]).to_list() == [0, 0.5, 1]
    assert refine(p, []) is p
    q = uniform_partition(unit, 2)
    assert refine(q, [0.5]) == q
    with pytest.raises(DomainError):
        refine(q, [1.5])


def test_common_refinement(unit):
    p = Partition(unit, [0, 0.5, 1])
    q = Partition(unit, [0, 0.25, 1])
    assert common_refinement(p, q).to_list() == [0, 0.25, 0.5, 1]
    assert common_refinement(p, p) == p
    thirds = common_refinement(Partition(unit, [0, 1 / 3, 1]), Partition(unit, [0, 2 / 3, 1]))
    assert thirds.to_list() == pytest.approx([0, 1 / 3, 2 / 3, 1])
    assert thirds.refines(p) is False
    assert common_refinement(p, q).refines(p)


def test_common_refinement_needs_common_base(unit):
    with pytest.raises(BaseMismatch):
        common_refinement(Partition(unit, [0, 1]), uniform_partition(ClosedInterval(0, 2), 2))


def test_breakpoints_are_merged_and_pinned(unit):
    p = Partition(unit, [1, 0.5, 0.5 + 1e-15, 0])
    assert p.to_list() == [0, 0.5, 1]
    assert Partition(unit, [0.5]).to_list() == [0, 0.5, 1]
    with pytest.raises(DomainError):
        Partition(unit, [0, 2])
    with pytest.raises(ArgumentError):
        Partition(unit, [])


def test_degenerate_partition():
    p = Partition(ClosedInterval(3, 3), [3])
    assert p.size == 0
    assert p.mesh() == 0.0
    assert p.cells() == []


def test_lengths_and_mesh(unit):
    p = Partition(unit, [0, 0.25, 1])
    assert p.lengths().tolist() == [0.25, 0.75]
    assert mesh(p) == 0.75
    assert [c.to_list() for c in p.cells()] == [[0, 0.25], [0.25, 1]]


def test_restrict_and_concatenate(unit):
    p = uniform_partition(unit, 4)
    middle = p.restrict(1, 3)
    assert middle.base == ClosedInterval(0.25, 0.75)
    assert middle.size == 2
    joined = concatenate([p.restrict(0, 1), middle, p.restrict(3, 4)])
    assert joined == p
    with pytest.raises(BaseMismatch):
        concatenate([p.restrict(0, 1), p.restrict(3, 4)])


def test_induced_by_identity(unit):
    p = Partition(unit, [0, 0.5, 1])
    assert induced_partition(p, Integrator.identity(unit)).to_list() == [0, 0.5, 1]


def test_induced_by_square(function, unit):
    square = Integrator.from_function(function("poly:1,0,0"))
    induced = induced_partition(Partition(unit, [0, 0.5, 1]), square)
    assert induced.base == ClosedInterval(0, 1)
    assert induced.to_list() == [0, 0.25, 1]


def test_induced_by_constant_collapses(function, unit):
    constant = Integrator.from_function(function("const:2"))
    induced = induced_partition(uniform_partition(unit, 5), constant)
    assert induced.base == ClosedInterval(2, 2)
    assert induced.size == 0


def test_induced_by_decreasing_map(function, unit):
    decreasing = Integrator.from_function(function("poly:-1,0"), Monotonicity.Nonincreasing)
    with pytest.raises(MonotonicityError):
        induced_partition(uniform_partition(unit, 2), decreasing)


def test_random_refinements_refine(unit, rng):
    p = uniform_partition(unit, 8)
    for _ in range(10):
        q = refine(p, rng.uniform(0, 1, size=5))
        assert q.refines(p)
        assert q.size <= p.size + 5
        assert np.all(np.diff(q.breakpoints) > 0)
        p = q


def test_common_refinement_has_finer_mesh(unit, rng):
    for _ in range(200):
        p = Partition(unit, np.sort(rng.uniform(0, 1, size=rng.integers(1, 10))))
        q = Partition(unit, np.sort(rng.uniform(0, 1, size=rng.integers(1, 10))))
        r = common_refinement(p, q)
        assert r.refines(p) and r.refines(q)
        assert mesh(r) <= min(mesh(p), mesh(q))


def test_induced_partition_commutes_with_refine(function, unit, rng):
    square = Integrator.from_function(function("poly:1,0,0"))
    for _ in range(100):
        p = Partition(unit, np.sort(rng.uniform(0, 1, size=rng.integers(1, 10))))
        points = rng.uniform(0, 1, size=rng.integers(1, 6))
        mapped_after = induced_partition(refine(p, points), square)
        mapped_before = refine(induced_partition(p, square), square.evaluate(points))
        assert mapped_after.base == mapped_before.base
        assert mapped_after.to_list() == pytest.approx(mapped_before.to_list(), abs=1e-15)
