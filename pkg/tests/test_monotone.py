import numpy as np
import pytest

from darbouxverifier.aux.config import default_config, load_config
from darbouxverifier.aux.errors import ArgumentError, RootNotBracketed
from darbouxverifier.partition import ClosedInterval
from darbouxverifier.substitution import (
    mean_value_points,
    monotone_unbounded_check,
    options_from_config,
)


def test_square_root_substitution(unit):
    report = monotone_unbounded_check(
        lambda y: y,
        np.sqrt,
        lambda x: 0.5 / np.sqrt(x),
        unit,
        closed_form=0.5,
    )
    assert not report.is_heuristic
    assert report.levels[-1].cells == 2 ** 16
    assert report.riemann_sums_lhs[-1] == pytest.approx(0.5, abs=1e-9)
    assert report.riemann_sums_rhs[-1] == pytest.approx(0.5, abs=1e-9)
    assert report.converged_gap < 1e-9


def test_identity_substitution_matches_cellwise(unit):
    report = monotone_unbounded_check(
        np.cos, lambda x: x, lambda x: np.ones_like(x), unit, meshes=[1, 3, 10]
    )
    assert report.gaps == [0.0, 0.0, 0.0]
    assert [level.cells for level in report.levels] == [1, 3, 10]


def test_boundary_exponent_pair(unit):
    report = monotone_unbounded_check(
        np.cbrt,
        lambda x: np.power(x, 0.75),
        lambda x: 0.75 * np.power(x, -0.25),
        unit,
        closed_form=0.75,
    )
    assert report.levels[-1].cells == 2 ** 16
    assert report.levels[-1].lhs_error < 1e-9
    assert report.levels[-1].rhs_error < 1e-9
    assert report.converged_gap < 1e-9
    assert report.to_dict()["heuristic"] is False


def test_default_meshes(unit):
    report = monotone_unbounded_check(
        lambda y: y, lambda x: x, lambda x: np.ones_like(x), unit, max_level=3
    )
    assert [level.cells for level in report.levels] == [2, 4, 8]


def test_unbracketed_cells_fall_back_to_midpoints(unit):
    wrong_derivative = lambda x: 2.0 + 0.0 * x
    report = monotone_unbounded_check(lambda y: y, lambda x: x, wrong_derivative, unit, meshes=[4])
    assert report.is_heuristic
    assert report.levels[0].heuristic_cells == 4
    with pytest.raises(RootNotBracketed) as e:
        monotone_unbounded_check(
            lambda y: y, lambda x: x, wrong_derivative, unit, meshes=[4], strict=True
        )
    assert e.value.cell == 0


def test_mean_value_points_of_square():
    lefts, rights = np.array([0.0, 0.5]), np.array([0.5, 1.0])
    increments = rights ** 2 - lefts ** 2
    points, fallback = mean_value_points(lambda x: 2 * x, lefts, rights, increments)
    assert points == pytest.approx([0.25, 0.75])
    assert not fallback.any()


def test_meshes_must_be_positive():
    with pytest.raises(ArgumentError):
        monotone_unbounded_check(
            lambda y: y, lambda x: x, lambda x: np.ones_like(x), ClosedInterval(0, 1), meshes=[]
        )


def test_options_from_default_config(unit):
    options = options_from_config(default_config(environ={}))
    assert options == {"root_tolerance": 1e-12, "max_level": 16}


def test_options_from_config_file(tmp_path, unit):
    path = tmp_path / "config.yaml"
    path.write_text("monotone:\n  maxLevel: 3\n  rootTolerance: 1.0e-9\n")
    _, config, _ = load_config(path, environ={})
    report = monotone_unbounded_check(
        lambda y: y, np.sqrt, lambda x: 0.5 / np.sqrt(x), unit, **options_from_config(config)
    )
    assert [level.cells for level in report.levels] == [2, 4, 8]
    assert report.converged_gap < 1e-6
