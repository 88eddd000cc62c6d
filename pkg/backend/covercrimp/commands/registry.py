"""Subcommand lookup by name and by category"""

from collections import defaultdict

from covercrimp.commands.base import CommandCollection
from covercrimp.commands.command import Command, CommandCategory


class CommandRegistry:
    """Maps each subcommand to its Command and to the collection that runs it"""

    def __init__(self):
        self._commands: dict[str, tuple[Command, CommandCollection]] = {}
        self._by_category: dict[CommandCategory, list[Command]] = defaultdict(list)

    def register_collection(self, collection: CommandCollection) -> None:
        for command in collection.get_commands():
            if command.name in self._commands:
                raise ValueError(f"Subcommand {command.name} is registered twice")
            self._commands[command.name] = (command, collection)
            self._by_category[command.category].append(command)

    def get_command(self, name: str) -> Command | None:
        entry = self._commands.get(name)
        return entry[0] if entry else None

    def get_collection_for_command(self, name: str) -> CommandCollection | None:
        entry = self._commands.get(name)
        return entry[1] if entry else None

    def get_commands_by_category(self, category: CommandCategory) -> list[Command]:
        return sorted(self._by_category[category], key=lambda c: c.name)

    def overview(self) -> str:
        """Subcommands grouped by category, one ``name  description`` line each"""
        width = max((len(name) for name in self._commands), default=0)
        blocks = []
        for category in CommandCategory:
            commands = self.get_commands_by_category(category)
            if commands:
                lines = [f"  {c.name.ljust(width)}  {c.description}" for c in commands]
                blocks.append(f"{category.value}:\n" + "\n".join(lines))
        return "\n\n".join(blocks)
