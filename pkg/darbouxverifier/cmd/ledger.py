import logging

from darbouxverifier.aux.errors import ArgumentError, BudgetExceeded, DomainError, WidthExceeded
from darbouxverifier.aux.output import emit
from darbouxverifier.functions.gallery import Gallery
from darbouxverifier.functions.real_function import is_nonnegative
from darbouxverifier.partition.partition import uniform_partition
from darbouxverifier.stieltjes.checks import reduce_check, transfer_check
from darbouxverifier.substitution.converse import converse_check
from darbouxverifier.substitution.verdict import substitution_ledger
from darbouxverifier.cmd.common import (
    build_integrator,
    exit_status,
    get_config,
    get_interval,
    get_refinement,
    image_domain,
    report_exhausted,
)

logger = logging.getLogger(__name__)


def ledger(args):
    if args["format"] != "json":
        raise ArgumentError("the ledger is only available as JSON")
    config = get_config(args)
    gallery = Gallery.create_from_config(config)
    interval = get_interval(args)
    refinement = get_refinement(args, config)
    eta = args["eta"]
    workers = config["workers"]

    payload = {
        "command": "ledger",
        "f": args["f"],
        "phi": args["phi"],
        "interval": interval.to_list(),
        "anchor": args["anchor"],
        "eta": eta,
    }
    try:
        density, integrator = build_integrator(
            args, config, gallery, interval, args["tol"], refinement
        )
        f = gallery(args["f"], image_domain(integrator))
        bounds = substitution_ledger(f, density, integrator, eta, refinement=refinement, workers=workers)
        converse = converse_check(f, density, integrator, eta, refinement=refinement, workers=workers)
    except (WidthExceeded, BudgetExceeded) as e:
        return report_exhausted(e, args, payload)

    payload["ledger"] = bounds.to_dict()
    payload["converse"] = converse.to_dict()
    ok = bounds.all_ok and converse.ok

    if f.is_exact and is_nonnegative(density, interval):
        partition = uniform_partition(interval, args["cells"])
        transfer = transfer_check(f, integrator, partition)
        payload["transfer"] = transfer.to_dict()
        ok = ok and transfer.ok
        try:
            g = gallery(args["f"], interval)
        except DomainError as e:
            logger.info("no reduction check: %s", e)
        else:
            reduction = reduce_check(g, density, integrator, partition)
            payload["reduction"] = reduction.to_dict()
            ok = ok and reduction.bound16_ok and reduction.converse_ok

    certified = f.is_certifiable and density.is_certifiable
    emit(payload, [], args["output"], args["format"])
    return exit_status(ok and certified)
