import logging
import sys

from darbouxverifier.aux.config import default_config
from darbouxverifier.aux.errors import BudgetExceeded, WidthExceeded
from darbouxverifier.aux.output import emit, enclosure_row
from darbouxverifier.darboux.refinement import AdaptiveRefinement
from darbouxverifier.partition.interval import ClosedInterval
from darbouxverifier.stieltjes.indefinite import build_indefinite_integral

logger = logging.getLogger(__name__)

EXIT_CERTIFIED = 0
EXIT_USAGE = 1
EXIT_HEURISTIC = 2
EXIT_BUDGET = 3


def get_config(args):
    config = args.get("config-with-defaults")
    return config if config is not None else default_config()


def get_refinement(args, config):
    refinement = AdaptiveRefinement.create_from_config(config)
    return refinement.with_budget(args.get("budget"))


def get_interval(args):
    a, b = args["interval"]
    return ClosedInterval(a, b)


def exit_status(certified):
    return EXIT_CERTIFIED if certified else EXIT_HEURISTIC


def image_domain(integrator):
    """Domain for f in f(Φ): the image of Φ, padded without crossing zero from above."""
    image = integrator.image()
    margin = 1e-9 * max(1.0, image.length)
    a = image.a - margin
    if a < 0 <= image.a + margin:
        a = 0.0
    return ClosedInterval(a, image.b + margin)


def build_integrator(args, config, gallery, interval, tol, refinement):
    density = gallery(args["phi"], interval)
    integrator = build_indefinite_integral(
        density,
        interval.a,
        args.get("anchor", 0.0),
        config["integrator"]["gridCells"],
        config["integrator"]["toleranceFraction"] * tol,
        refinement=refinement,
        ulps_per_term=config["rounding"]["ulpsPerTerm"],
    )
    return density, integrator


def report_exhausted(error, args, payload):
    """Prints the failure and still writes the best bracket reached."""
    print("{}: {}".format(type(error).__name__, error), file=sys.stderr)
    best = error.best
    rows = []
    if isinstance(error, WidthExceeded) and best is not None:
        payload = dict(payload, **best.to_dict(), converged=False)
        rows = [enclosure_row(best)]
    elif isinstance(error, BudgetExceeded):
        payload = dict(payload, best_osc_sum=best, cell=error.cell)
    emit(payload, rows, args["output"], args["format"])
    return EXIT_BUDGET