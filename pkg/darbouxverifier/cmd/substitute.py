from darbouxverifier.aux.errors import BudgetExceeded, WidthExceeded
from darbouxverifier.aux.output import emit, enclosure_row
from darbouxverifier.functions.gallery import Gallery
from darbouxverifier.substitution.verdict import change_of_variable
from darbouxverifier.cmd.common import (
    build_integrator,
    exit_status,
    get_config,
    get_interval,
    get_refinement,
    image_domain,
    report_exhausted,
)


def substitute(args):
    config = get_config(args)
    gallery = Gallery.create_from_config(config)
    interval = get_interval(args)
    refinement = get_refinement(args, config)
    tol = args["tol"]
    eta = args["eta"] if args["eta"] is not None else config["substitution"]["eta"]

    payload = {
        "command": "substitute",
        "f": args["f"],
        "phi": args["phi"],
        "interval": interval.to_list(),
        "anchor": args["anchor"],
        "tol": tol,
    }
    try:
        density, integrator = build_integrator(args, config, gallery, interval, tol, refinement)
        f = gallery(args["f"], image_domain(integrator))
        verdict = change_of_variable(
            f,
            density,
            interval,
            anchor=args["anchor"],
            eta=eta,
            tol=tol,
            refinement=refinement,
            grid_cells=config["integrator"]["gridCells"],
            tolerance_fraction=config["integrator"]["toleranceFraction"],
            with_ledger=config["substitution"]["ledger"],
            workers=config["workers"],
            integrator=integrator,
        )
    except (WidthExceeded, BudgetExceeded) as e:
        return report_exhausted(e, args, payload)

    payload.update(verdict.to_dict())
    rows = [enclosure_row(verdict.lhs), enclosure_row(verdict.rhs)]
    emit(payload, rows, args["output"], args["format"])
    return exit_status(verdict.is_certified)
