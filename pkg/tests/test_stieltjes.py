import numpy as np
import pytest

from darbouxverifier.aux.errors import (
    ArgumentError,
    DomainError,
    MonotonicityError,
    PositivityError,
    WidthExceeded,
)
from darbouxverifier.aux.enclosure import Rigor
from darbouxverifier.darboux import integral_enclosure
from darbouxverifier.functions import multiply
from darbouxverifier.partition import ClosedInterval, Partition, uniform_partition
from darbouxverifier.stieltjes import (
    Integrator,
    Monotonicity,
    build_indefinite_integral,
    reduce_check,
    stieltjes_enclosure,
    transfer_check,
)


@pytest.fixture
def square(function):
    return Integrator.from_function(function("poly:1,0,0"))


@pytest.mark.parametrize(
    "lo, hi, expected",
    [
        (0.0, 0.0, Monotonicity.Constant),
        (0.0, 2.0, Monotonicity.Nondecreasing),
        (-1.0, 0.0, Monotonicity.Nonincreasing),
        (-0.5, 0.5, Monotonicity.Unknown),
    ],
)
def test_monotonicity_of_density(lo, hi, expected):
    assert Monotonicity.of_density(lo, hi) == expected


def test_negated_integrator(unit):
    negated = Integrator.identity(unit).negated()
    assert negated.monotonicity == Monotonicity.Nonincreasing
    assert negated.evaluate(0.25) == -0.25
    lo, hi = negated.range_enclosure([0.0], [0.5])
    assert (lo[0], hi[0]) == (-0.5, 0.0)


def test_unit_density(function):
    phi = build_indefinite_integral(function("const:1"), tol=1e-8)
    assert phi.monotonicity == Monotonicity.Nondecreasing
    assert phi.enclosure(0.7).contains(0.7)
    assert phi.enclosure(0.0).contains(0.0)
    assert phi.rigor == Rigor.Certified


def test_linear_density(function):
    phi = build_indefinite_integral(function("poly:2,0"), tol=1e-3)
    value = phi.enclosure(0.5)
    assert value.contains(0.25)
    assert value.width <= 1e-3
    assert phi.enclosure(0.3).contains(0.09)
    assert phi.image().b == pytest.approx(1.0, abs=1e-3)


def test_step_density(function):
    phi = build_indefinite_integral(function("step:0.5"), tol=1e-3)
    assert phi.enclosure(0.75).contains(0.25)
    assert phi.enclosure(0.25).contains(0.0)


def test_anchor_and_start(function):
    density = function("const:1")
    phi = build_indefinite_integral(density, a=0.5, anchor=2.0, tol=1e-8)
    assert phi.domain == ClosedInterval(0.5, 1.0)
    assert phi.anchor == 2.0
    assert phi.enclosure(1.0).contains(2.5)
    with pytest.raises(DomainError):
        build_indefinite_integral(density, a=1.5)


def test_degenerate_indefinite_integral(function):
    phi = build_indefinite_integral(function("const:1"), a=1.0, anchor=3.0)
    assert phi.domain.is_degenerate
    assert phi.enclosure(1.0).contains(3.0)


def test_sign_changing_density(function):
    phi = build_indefinite_integral(function("poly:1,-0.5"), tol=1e-3)
    assert phi.monotonicity == Monotonicity.Unknown
    assert phi.enclosure(0.5).contains(-0.125)
    image = phi.image()
    assert image.a == pytest.approx(-0.125, abs=1e-3)
    assert image.b == pytest.approx(0.0, abs=1e-3)


def test_increments_telescope(function, unit):
    phi = build_indefinite_integral(function("poly:2,0"), tol=1e-3)
    d_lo, d_mid, d_hi = phi.increments(uniform_partition(unit, 64).breakpoints)
    assert np.all(d_lo <= d_mid) and np.all(d_mid <= d_hi)
    assert d_lo.sum() <= 1.0 <= d_hi.sum()
    assert (d_hi - d_lo).sum() < 0.05


def test_width_exceeded_keeps_best(function):
    with pytest.raises(WidthExceeded) as e:
        build_indefinite_integral(function("poly:2,0"), grid_cells=4, tol=1e-9, budget=32)
    assert e.value.best.contains(1.0)


def test_transfer_on_square(function, square, unit):
    report = transfer_check(function("poly:1,0"), square, Partition(unit, [0, 0.5, 1]))
    assert report.lhs_upper == pytest.approx(0.8125)
    assert report.rhs_upper == pytest.approx(0.8125)
    assert report.lhs_lower == pytest.approx(0.1875)
    assert report.ok


def test_transfer_of_constant(function, square, unit):
    report = transfer_check(function("const:2"), square, uniform_partition(unit, 8))
    assert report.lhs_upper == pytest.approx(2.0)
    assert report.rhs_lower == pytest.approx(2.0)
    assert report.ok


def test_transfer_against_identity_is_trivial(function, unit):
    report = transfer_check(function("poly:1,0,0"), Integrator.identity(unit), uniform_partition(unit, 16))
    assert report.max_abs_gap == 0.0
    assert report.ok


def test_transfer_against_tabulated_integral(function, unit):
    integrator = build_indefinite_integral(function("const:1"), tol=1e-8)
    report = transfer_check(function("poly:1,0", 0, 1.01), integrator, uniform_partition(unit, 16))
    assert report.lhs_upper == pytest.approx(17 / 32)
    assert report.slack > 0.0
    assert report.ok


def test_transfer_needs_exact_oracle(function, square, unit):
    with pytest.raises(ArgumentError):
        transfer_check(function("dirichlet"), square, uniform_partition(unit, 4))


def test_reduction_with_unit_density(function, unit):
    density = function("const:1")
    phi = build_indefinite_integral(density, tol=1e-8)
    report = reduce_check(function("poly:1,0"), density, phi, uniform_partition(unit, 4))
    assert report.riemann_gap == pytest.approx(0.25)
    assert report.stieltjes_gap == pytest.approx(0.25)
    assert report.osc_term == 0.0
    assert report.bound16_ok
    assert report.converse_ok


def test_reduction_with_constant_integrand(function, unit):
    density = function("poly:2,0")
    phi = build_indefinite_integral(density, tol=1e-3)
    report = reduce_check(function("const:1"), density, phi, uniform_partition(unit, 10))
    assert report.stieltjes_gap == 0.0
    assert report.riemann_gap == pytest.approx(report.osc_term)
    assert report.bound16_ok


def test_reduction_with_linear_density(function, unit):
    density = function("poly:2,0")
    phi = build_indefinite_integral(density, tol=1e-3)
    report = reduce_check(function("poly:1,0"), density, phi, uniform_partition(unit, 10))
    assert report.bound16_ok
    assert report.converse_ok
    assert report.to_dict()["bound16_ok"]


def test_reduction_rejects_negative_density(function, unit):
    density = function("poly:1,-0.5")
    with pytest.raises(PositivityError):
        reduce_check(function("poly:1,0"), density, Integrator.identity(unit), uniform_partition(unit, 4))


def test_reduction_rejects_foreign_integrator(function, unit):
    phi = build_indefinite_integral(function("const:1"), tol=1e-8)
    with pytest.raises(ArgumentError):
        reduce_check(function("poly:1,0"), function("poly:2,0"), phi, uniform_partition(unit, 4))


def test_stieltjes_enclosure_of_constant(function, square):
    assert stieltjes_enclosure(function("const:1"), square, tol=1e-6).contains(1.0)


def test_stieltjes_enclosure_against_square(function, square):
    enclosure = stieltjes_enclosure(function("poly:1,0"), square, tol=1e-3)
    assert enclosure.contains(2 / 3)
    assert enclosure.width <= 1e-3


def test_stieltjes_enclosure_against_step_integral(function):
    phi = build_indefinite_integral(function("step:0.5"), tol=1e-3)
    enclosure = stieltjes_enclosure(function("poly:1,0"), phi, tol=1e-2)
    assert enclosure.contains(0.375)


def test_stieltjes_enclosure_exhausted(function, square):
    with pytest.raises(WidthExceeded) as e:
        stieltjes_enclosure(function("poly:1,0"), square, tol=1e-9, budget=8)
    assert e.value.best.contains(2 / 3)


def test_stieltjes_enclosure_needs_nondecreasing_integrator(function, square):
    with pytest.raises(MonotonicityError):
        stieltjes_enclosure(function("poly:1,0"), square.negated())


def test_integrator_records_tolerance(function, unit):
    assert Integrator.identity(unit).tolerance == 0.0
    phi = build_indefinite_integral(function("poly:2,0"), tol=1e-3)
    assert phi.tolerance == 1e-3
    assert phi.negated().tolerance == 1e-3


def test_negated_integrator_is_an_involution(square, unit, rng):
    twice = square.negated().negated()
    assert twice.monotonicity == Monotonicity.Nondecreasing
    xs = rng.uniform(0, 1, size=50)
    assert np.array_equal(twice.evaluate(xs), square.evaluate(xs))
    lo, hi = square.enclose(xs)
    twice_lo, twice_hi = twice.enclose(xs)
    assert np.array_equal(lo, twice_lo) and np.array_equal(hi, twice_hi)


TRANSFER_INTEGRATORS = {
    "x": lambda function: Integrator.identity(ClosedInterval(0, 1)),
    "x^2": lambda function: Integrator.from_function(function("poly:1,0,0")),
    "x^3+x": lambda function: Integrator.from_function(function("poly:1,0,1,0")),
}


@pytest.mark.parametrize(
    "gallery_id, continuous",
    [("poly:1,-1,0", True), ("cos", True), ("sin", True), ("abs:0.7", True), ("step:0.9", False)],
)
@pytest.mark.parametrize("integrator_name", sorted(TRANSFER_INTEGRATORS))
def test_transfer_on_uniform_partitions(function, gallery_id, continuous, integrator_name, unit):
    f = function(gallery_id, 0, 2)
    integrator = TRANSFER_INTEGRATORS[integrator_name](function)
    for n in range(1, 201):
        report = transfer_check(f, integrator, uniform_partition(unit, n))
        assert report.ok, n
        if continuous:
            assert report.max_abs_gap <= 1e-12 * (1 + abs(report.lhs_upper)), n


@pytest.mark.parametrize("density_id", ["const:1", "poly:2,0", "abs:0.5"])
def test_reduction_on_random_partitions(function, density_id, unit, rng):
    density = function(density_id)
    phi = build_indefinite_integral(density, tol=1e-3)
    integrands = [function(gallery_id) for gallery_id in ("poly:1,0", "cos", "step:0.5")]
    for _ in range(1000):
        g = integrands[rng.integers(len(integrands))]
        p = Partition(unit, np.sort(rng.uniform(0, 1, size=rng.integers(1, 30))))
        report = reduce_check(g, density, phi, p)
        assert report.bound16_ok
        assert report.converse_ok


@pytest.mark.parametrize(
    "g_id, density_id, exact",
    [
        ("poly:1,0", "const:1", 0.5),
        ("poly:1,0", "poly:2,0", 2 / 3),
        ("poly:1,0", "step:0.5", 0.375),
        ("cos", "abs:0.5", None),
    ],
)
def test_stieltjes_enclosure_matches_riemann_enclosure(function, g_id, density_id, exact):
    g, density = function(g_id), function(density_id)
    phi = build_indefinite_integral(density, tol=1e-3)
    stieltjes = stieltjes_enclosure(g, phi, tol=1e-2)
    riemann = integral_enclosure(multiply(g, density), tol=1e-2)
    assert stieltjes.overlaps(riemann)
    if exact is not None:
        assert stieltjes.contains(exact)
        assert riemann.contains(exact)
