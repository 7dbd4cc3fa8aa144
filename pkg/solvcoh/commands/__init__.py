"""
Command line commands, one class each.
"""
from .base import Command, SCHEMA, parse_params
from .algebra import BettiCommand, MostowCommand, ModifyCommand, LatticeCheckCommand, InvariantsCommand
from .geometry import SymplecticCommand, LefschetzCommand
from .homotopy import ModelCommand, FormalityCommand, UModuleCommand
from .table1 import Table1Command, TABLE1, format_tbar

COMMANDS = (
    BettiCommand,
    MostowCommand,
    ModifyCommand,
    LatticeCheckCommand,
    InvariantsCommand,
    SymplecticCommand,
    LefschetzCommand,
    ModelCommand,
    FormalityCommand,
    UModuleCommand,
    Table1Command,
)
