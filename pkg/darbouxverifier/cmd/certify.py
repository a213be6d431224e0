from darbouxverifier.aux.enclosure import Rigor
from darbouxverifier.aux.output import emit
from darbouxverifier.darboux.integrability import certify_integrable
from darbouxverifier.functions.gallery import Gallery
from darbouxverifier.stieltjes.integrator import Integrator
from darbouxverifier.cmd.common import (
    EXIT_BUDGET,
    build_integrator,
    exit_status,
    get_config,
    get_interval,
    get_refinement,
)


def certify(args):
    config = get_config(args)
    gallery = Gallery.create_from_config(config)
    interval = get_interval(args)
    refinement = get_refinement(args, config)
    f = gallery(args["f"], interval)
    if args["phi"] is None:
        integrator = Integrator.identity(interval)
    else:
        _, integrator = build_integrator(
            args, config, gallery, interval, args["eps"], refinement
        )

    result = certify_integrable(f, integrator, interval, args["eps"], refinement=refinement)
    payload = {
        "command": "certify",
        "f": args["f"],
        "phi": args["phi"],
        "interval": interval.to_list(),
    }
    payload.update(result.to_dict())
    osc = payload["osc_sum"]
    row = {"cells": payload["cells"], "lo": 0.0, "hi": osc, "width": osc}
    emit(payload, [row], args["output"], args["format"])
    if not result.is_conclusive:
        return EXIT_BUDGET
    return exit_status(result.rigor == Rigor.Certified)
