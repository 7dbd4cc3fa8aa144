"""
Configuration values and the comma separated override list.
"""
import logging
from collections import OrderedDict

logger = logging.getLogger(__name__)


class Config:
    """
    Registered configuration values.

    Values are registered with a default, then read and overridden by name like a dict.
    """

    def __init__(self):
        self._values = OrderedDict()
        self._defaults = OrderedDict()

    def add(self, name, default):
        if name in self._defaults:
            raise ValueError("config value {!r} is already registered".format(name))
        self._defaults[name] = default
        self._values[name] = default

    def __contains__(self, name):
        return name in self._values

    def __getitem__(self, name):
        return self._values[name]

    def __setitem__(self, name, value):
        self._values[name] = value

    def get(self, name, default=None):
        return self._values.get(name, default)

    def overridden(self):
        """Names whose current value differs from the registered default."""
        return [n for n, v in self._values.items() if v != self._defaults[n]]


INSTRUCTIONS = {
    "no_massey": ("solvcoh_massey_max_degree", 0),
    "no_model": ("solvcoh_skip_model", True),
    "full_modification": ("solvcoh_full_modification", True),
    "quiet": ("solvcoh_quiet", True),
}


def apply_options(config, warn=None):
    """
    Apply the comma separated instructions in ``solvcoh_options``.

    Unrecognised instructions are reported through ``warn`` and ignored.
    """
    warn = warn or logger.warning
    instructions = []
    overrides = config["solvcoh_options"]
    if overrides:
        instructions = overrides.split(",")

    for instruction in instructions:
        instruction = instruction.strip()
        if not instruction:
            continue
        if instruction in INSTRUCTIONS:
            name, value = INSTRUCTIONS[instruction]
            config[name] = value
        else:
            warn("Unrecognised option " + instruction + ", ignoring.")
    return config
