from darbouxverifier.aux.enclosure import Rigor
from darbouxverifier.aux.output import emit, enclosure_row
from darbouxverifier.darboux.sums import darboux_sums
from darbouxverifier.functions.gallery import Gallery
from darbouxverifier.partition.partition import uniform_partition
from darbouxverifier.stieltjes.integrator import Integrator
from darbouxverifier.cmd.common import (
    build_integrator,
    exit_status,
    get_config,
    get_interval,
    get_refinement,
)


def cell_counts(max_cells):
    n = 2
    while n <= max_cells:
        yield n
        n *= 2


def converge(args):
    config = get_config(args)
    gallery = Gallery.create_from_config(config)
    interval = get_interval(args)
    f = gallery(args["f"], interval)
    if args["phi"] is None:
        integrator = Integrator.identity(interval)
    else:
        _, integrator = build_integrator(
            args, config, gallery, interval, args["tol"], get_refinement(args, config)
        )

    ulps = config["rounding"]["ulpsPerTerm"]
    rows = []
    certified = True
    for n in cell_counts(args["max_cells"]):
        sums = darboux_sums(f, integrator, uniform_partition(interval, n), ulps)
        rows.append(enclosure_row(sums.enclosure()))
        certified = certified and sums.rigor == Rigor.Certified

    payload = {
        "command": "converge",
        "f": args["f"],
        "phi": args["phi"],
        "interval": interval.to_list(),
        "rows": rows,
    }
    emit(payload, rows, args["output"], args["format"])
    return exit_status(certified)
