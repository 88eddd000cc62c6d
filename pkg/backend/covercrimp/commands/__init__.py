"""Subcommands behind the command-line front door"""

from covercrimp.commands.base import CommandCollection
from covercrimp.commands.command import Command, CommandCategory
from covercrimp.commands.cover_collection import CoverCommands
from covercrimp.commands.crimp_collection import CrimpCommands
from covercrimp.commands.curve_collection import CurveCommands
from covercrimp.commands.monodromy_collection import MonodromyCommands
from covercrimp.commands.registry import CommandRegistry


def build_registry() -> CommandRegistry:
    registry = CommandRegistry()
    for collection in (CoverCommands(), CrimpCommands(), CurveCommands(), MonodromyCommands()):
        registry.register_collection(collection)
    return registry


__all__ = [
    "Command",
    "CommandCategory",
    "CommandCollection",
    "CommandRegistry",
    "CoverCommands",
    "CrimpCommands",
    "CurveCommands",
    "MonodromyCommands",
    "build_registry",
]
