"""
The ``solvcoh`` command line.

    solvcoh betti --catalog g5.18+R
    solvcoh invariants --catalog g5.18+R --tbar 1/3
    solvcoh table1 --format tsv
"""
import argparse
import logging
import sys

from . import setup, __version__
from .application import Application
from .errors import SolvcohError

logger = logging.getLogger(__name__)


def _common(command_class):
    parser = argparse.ArgumentParser(add_help=False)
    if command_class.takes_algebra:
        source = parser.add_mutually_exclusive_group()
        source.add_argument("--algebra", metavar="FILE", help="algebra file")
        source.add_argument("--catalog", metavar="NAME", help="catalog algebra, e.g. g6.10")
        parser.add_argument("--params", metavar="K=V,...", help="catalog parameters, e.g. p=0,r=2")
        parser.add_argument("--tbar", metavar="Q", help="lattice at t = Q*pi, Q rational")
    parser.add_argument("--cap", type=int, help="degree cap of minimal models")
    parser.add_argument("--seed", type=int, help="seed of the random choices")
    parser.add_argument("--format", choices=("json", "tsv", "ipynb"), help="output format")
    parser.add_argument("--options", metavar="OPT,...",
                        help="comma separated: no_massey, no_model, full_modification, quiet")
    parser.add_argument("--output", "-o", metavar="FILE", help="write to FILE instead of stdout")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress")
    return parser


def build_parser(app):
    parser = argparse.ArgumentParser(prog="solvcoh",
                                     description="Cohomology of almost abelian solvmanifolds.")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    for name, command_class in app.commands.items():
        sub = subparsers.add_parser(name, parents=[_common(command_class)], help=command_class.help,
                                    description=command_class.__doc__)
        command_class.add_arguments(sub)
    return parser


def main(argv=None):
    app = Application()
    setup(app)
    parser = build_parser(app)
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        app.configure(solvcoh_model_cap=args.cap, solvcoh_seed=args.seed, solvcoh_format=args.format,
                      solvcoh_options=args.options)
        command = app.create(args.command)
        document = command.run(args)
        writer = app.writer(app.config["solvcoh_format"])
    except SolvcohError as err:
        logger.error("%s: %s", type(err).__name__, err)
        return 2
    if args.output:
        if not writer.save(document, args.output):
            return 2
    else:
        sys.stdout.write(writer.write(document))
    return command.exit_status(document)


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
