"""
The application object: a registry of commands, writers and configuration values that
:func:`solvcoh.setup` fills in.
"""
import logging
from collections import OrderedDict

from .config import Config, apply_options

logger = logging.getLogger(__name__)


class Application:

    def __init__(self):
        self.config = Config()
        self.commands = OrderedDict()
        self.writers = OrderedDict()

    def add_command(self, command_class):
        if command_class.name in self.commands:
            raise ValueError("command {!r} is already registered".format(command_class.name))
        self.commands[command_class.name] = command_class

    def add_writer(self, writer_class):
        self.writers[writer_class.format] = writer_class

    def add_config_value(self, name, default):
        self.config.add(name, default)

    def create(self, name):
        """Instantiate and initialise the command ``name``."""
        try:
            command_class = self.commands[name]
        except KeyError:
            raise ValueError("unknown command {!r}".format(name))
        command = command_class(self)
        command.init()
        return command

    def configure(self, **overrides):
        """Set config values given on the command line, then apply the options string."""
        for name, value in overrides.items():
            if value is None:
                continue
            if name not in self.config:
                raise ValueError("unknown config value {!r}".format(name))
            self.config[name] = value
        apply_options(self.config, warn=logger.warning)
        return self.config

    def writer(self, format):
        try:
            return self.writers[format](self)
        except KeyError:
            raise ValueError("unknown output format {!r}; known: {}".format(format, ", ".join(self.writers)))
