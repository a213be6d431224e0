import argparse
import logging
import pathlib
import sys
import jsonschema
from ruamel.yaml import YAMLError

from darbouxverifier.aux.config import load_config
from darbouxverifier.aux.errors import BudgetExceeded, VerificationError, WidthExceeded
from darbouxverifier.cmd.common import EXIT_BUDGET, EXIT_USAGE
from darbouxverifier.cmd.certify import certify
from darbouxverifier.cmd.converge import converge
from darbouxverifier.cmd.enclose import enclose
from darbouxverifier.cmd.ledger import ledger
from darbouxverifier.cmd.substitute import substitute
from darbouxverifier.functions.gallery import parse_id


class ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "{}: error: {}\n".format(self.prog, message))


class ConfigParseAction(argparse.Action):
    def __init__(self, option_strings, dest, **kwargs):
        super().__init__(option_strings, dest, **kwargs)

    def __call__(self, parser, namespace, values, option_string=None):
        try:
            config, config_with_defaults, raw_config = load_config(values)
        except (OSError, YAMLError, jsonschema.ValidationError) as e:
            parser.error("invalid configuration {}: {}".format(values, e))
        setattr(namespace, "config-path", values)
        setattr(namespace, "config", config)
        setattr(namespace, "config-with-defaults", config_with_defaults)
        setattr(namespace, "raw-config", raw_config)


def gallery_id(value):
    try:
        parse_id(value)
    except VerificationError as e:
        raise argparse.ArgumentTypeError(str(e))
    return value


def positive_float(value):
    number = float(value)
    if not number > 0:
        raise argparse.ArgumentTypeError("must be positive, got {}".format(value))
    return number


def positive_int(value):
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError("must be at least 1, got {}".format(value))
    return number


def add_function_arguments(parser, phi_required=False):
    parser.add_argument(
        "--f",
        type=gallery_id,
        required=True,
        metavar="ID",
        help="integrand, as gallery id (e.g. poly:1,0 or thomae:50)",
    )
    parser.add_argument(
        "--phi",
        type=gallery_id,
        required=phi_required,
        metavar="ID",
        help="density φ of the integrator Φ(x) = Φ(a) + ∫_[a,x] φ",
    )
    parser.add_argument(
        "--interval",
        type=float,
        nargs=2,
        required=True,
        metavar=("A", "B"),
        help="interval of integration",
    )


def get_argument_parser():
    parser = ArgumentParser(prog="darboux-verifier")
    sub_parsers = parser.add_subparsers(help="run the given command", required=True)

    # parser for 'enclose' command
    parser_enclose = sub_parsers.add_parser(
        "enclose",
        help="enclose ∫_I f (or ∫_I f dΦ with --phi) to the given width",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser_enclose.set_defaults(func=enclose)
    add_function_arguments(parser_enclose)
    parser_enclose.add_argument(
        "--tol", type=positive_float, default=1e-6, help="maximal enclosure width"
    )

    # parser for 'certify' command
    parser_certify = sub_parsers.add_parser(
        "certify",
        help="find a partition whose oscillation sum is at most ε",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser_certify.set_defaults(func=certify)
    add_function_arguments(parser_certify)
    parser_certify.add_argument(
        "--eps", type=positive_float, default=1e-3, help="target oscillation sum ε"
    )

    # parser for 'substitute' command
    parser_substitute = sub_parsers.add_parser(
        "substitute",
        help="enclose both sides of ∫_[Φ(a),Φ(b)] f = ∫_I f(Φ)φ and compare them",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser_substitute.set_defaults(func=substitute)
    add_function_arguments(parser_substitute, phi_required=True)
    parser_substitute.add_argument(
        "--tol", type=positive_float, default=1e-6, help="maximal enclosure width"
    )
    parser_substitute.add_argument(
        "--eta",
        type=positive_float,
        help="η of the bound ledger (default: derived from --tol)",
    )

    # parser for 'ledger' command
    parser_ledger = sub_parsers.add_parser(
        "ledger",
        help="check the bounds of the change-of-variable argument for a given η",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser_ledger.set_defaults(func=ledger)
    add_function_arguments(parser_ledger, phi_required=True)
    parser_ledger.add_argument("--eta", type=positive_float, default=0.1, help="η")
    parser_ledger.add_argument(
        "--tol", type=positive_float, default=1e-6, help="width spent on enclosing Φ"
    )
    parser_ledger.add_argument(
        "--cells",
        type=positive_int,
        default=64,
        help="cells of the uniform partition used by the transfer and reduction checks",
    )

    # parser for 'converge' command
    parser_converge = sub_parsers.add_parser(
        "converge",
        help="certified Darboux brackets on uniform partitions of 2, 4, ... cells",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser_converge.set_defaults(func=converge)
    add_function_arguments(parser_converge)
    parser_converge.add_argument(
        "--max-cells", type=positive_int, default=1024, help="finest partition"
    )
    parser_converge.add_argument(
        "--tol", type=positive_float, default=1e-6, help="width spent on enclosing Φ"
    )

    all_subparsers = [
        parser_enclose,
        parser_certify,
        parser_substitute,
        parser_ledger,
        parser_converge,
    ]
    for sub_parser in all_subparsers:
        sub_parser.add_argument(
            "-c",
            "--config",
            type=pathlib.Path,
            action=ConfigParseAction,
            help="configuration file to load",
        )
        sub_parser.add_argument(
            "-v",
            "--verbose",
            action="count",
            default=0,
            help="log progress to stderr (repeat for debug output)",
        )
        sub_parser.add_argument(
            "--output", type=pathlib.Path, help="file to write the result to (default: stdout)"
        )
        sub_parser.add_argument(
            "--format", choices=["json", "csv"], default="json", help="result format"
        )
        sub_parser.add_argument(
            "--budget", type=positive_int, help="maximal number of cells of a partition"
        )
        sub_parser.add_argument(
            "--anchor", type=float, default=0.0, help="Φ(a), the value at the left end"
        )

    return parser


def configure_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def process_arguments(argv=None):
    parser = get_argument_parser()
    args = vars(parser.parse_args(argv))
    func = args["func"]
    del args["func"]
    configure_logging(args["verbose"])
    try:
        return func(args)
    except (WidthExceeded, BudgetExceeded) as e:
        print("{}: {}".format(type(e).__name__, e), file=sys.stderr)
        return EXIT_BUDGET
    except VerificationError as e:
        print("{}: {}".format(type(e).__name__, e), file=sys.stderr)
        return EXIT_USAGE
