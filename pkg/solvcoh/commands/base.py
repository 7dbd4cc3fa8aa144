"""
Base class of the command line commands.

A command reads its inputs from parsed arguments, computes with the library and returns a
result document: a JSON-ready dict with the canonical inputs, the results and provenance.
"""
import logging
from collections import OrderedDict

from .. import __version__
from ..errors import PreconditionError
from ..exact import to_rational, format_rational
from ..lie import catalog_build
from ..parser import read_algebra

SCHEMA = "solvcoh-result/1"


def parse_params(text):
    """``"p=1,r=1/2"`` to ``{"p": 1, "r": 1/2}`` with rational values."""
    params = {}
    if not text:
        return params
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise PreconditionError("parameter {!r} is not of the form name=value".format(item))
        name, value = item.split("=", 1)
        try:
            params[name.strip()] = to_rational(value)
        except (ValueError, TypeError, ZeroDivisionError) as err:
            raise PreconditionError("parameter {}: {}".format(name.strip(), err))
    return params


def format_params(params):
    return OrderedDict((k, format_rational(v)) for k, v in sorted(params.items()))


class Command:
    """
    Base class for commands.

    ``takes_algebra`` adds the algebra selection flags, ``needs_tbar`` makes ``--tbar``
    mandatory.
    """
    name = None
    help = None
    takes_algebra = True
    needs_tbar = False

    def __init__(self, app):
        self.app = app
        self.config = app.config
        self.logger = logging.getLogger("solvcoh.commands." + self.name)

    def init(self):
        pass

    @classmethod
    def add_arguments(cls, parser):
        pass

    def info(self, message, *args):
        if not self.config["solvcoh_quiet"]:
            self.logger.info(message, *args)

    def warn(self, message, *args):
        self.logger.warning(message, *args)

    def run(self, args):
        raise NotImplementedError

    def exit_status(self, document):
        return 0

    # inputs

    def load_algebra(self, args):
        """The algebra named by ``--algebra`` or ``--catalog``/``--params`` and its canonical input."""
        if getattr(args, "algebra", None):
            algebra = read_algebra(args.algebra)
            return algebra, OrderedDict([("file", args.algebra), ("text", algebra.to_text())])
        if getattr(args, "catalog", None):
            algebra = catalog_build(args.catalog, parse_params(args.params))
            return algebra, OrderedDict([("catalog", args.catalog), ("params", format_params(algebra.params))])
        raise PreconditionError("command {} needs --algebra FILE or --catalog NAME".format(self.name))

    def tbar(self, args, default=None):
        """t̄ as the rational q with t̄ = qπ."""
        value = getattr(args, "tbar", None)
        if value is None:
            if self.needs_tbar and default is None:
                raise PreconditionError("command {} needs --tbar q (t = q*pi)".format(self.name))
            return None if default is None else to_rational(default)
        try:
            return to_rational(value)
        except (ValueError, TypeError, ZeroDivisionError) as err:
            raise PreconditionError("--tbar: {}".format(err))

    @property
    def seed(self):
        return self.config["solvcoh_seed"]

    @property
    def order(self):
        return self.config["solvcoh_cyclotomic_order"]

    def document(self, inputs, results):
        return OrderedDict([
            ("schema", SCHEMA),
            ("command", self.name),
            ("inputs", inputs),
            ("results", results),
            ("provenance", OrderedDict([("tool", "solvcoh"), ("version", __version__),
                                        ("seed", self.seed),
                                        ("config", OrderedDict((name, self.config[name])
                                                               for name in self.config.overridden()))])),
        ])
