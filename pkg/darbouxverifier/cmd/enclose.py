from darbouxverifier.aux.errors import WidthExceeded
from darbouxverifier.aux.output import emit, enclosure_row
from darbouxverifier.darboux.integrability import integral_enclosure
from darbouxverifier.functions.gallery import Gallery
from darbouxverifier.stieltjes.checks import stieltjes_enclosure
from darbouxverifier.cmd.common import (
    build_integrator,
    exit_status,
    get_config,
    get_interval,
    get_refinement,
    report_exhausted,
)


def enclose(args):
    config = get_config(args)
    gallery = Gallery.create_from_config(config)
    interval = get_interval(args)
    refinement = get_refinement(args, config)
    tol = args["tol"]
    f = gallery(args["f"], interval)

    payload = {
        "command": "enclose",
        "f": args["f"],
        "phi": args["phi"],
        "interval": interval.to_list(),
        "tol": tol,
    }
    try:
        if args["phi"] is None:
            enclosure = integral_enclosure(f, None, interval, tol, refinement=refinement)
            if not enclosure.converged:
                raise WidthExceeded(
                    "width {:.3e} > {:.3e} after {} cells".format(
                        enclosure.width, tol, enclosure.cells
                    ),
                    best=enclosure,
                )
        else:
            _, integrator = build_integrator(args, config, gallery, interval, tol, refinement)
            enclosure = stieltjes_enclosure(f, integrator, interval, tol, refinement=refinement)
    except WidthExceeded as e:
        return report_exhausted(e, args, payload)

    closed_form = f.integral(interval) if args["phi"] is None else None
    payload.update(enclosure.to_dict())
    payload["closed_form"] = closed_form
    emit(payload, [enclosure_row(enclosure)], args["output"], args["format"])
    return exit_status(enclosure.is_certified)
