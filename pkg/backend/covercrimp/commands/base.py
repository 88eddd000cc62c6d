"""Base class for command collections"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Any

from covercrimp.commands.command import Command
from covercrimp.errors import SchemaError

if TYPE_CHECKING:
    from covercrimp.cli import JobConfig


class CommandCollection(ABC):
    """Base class for collections that provide and run Command instances"""

    @abstractmethod
    def get_commands(self) -> list[Command]:
        """Get Command instances for this collection"""
        pass

    def call_command(self, name: str, document: Any, cfg: JobConfig) -> dict[str, Any]:
        """Run a command on a parsed JSON document and return its report"""
        handler = getattr(self, f"_run_{name}", None)
        if handler is None:
            raise SchemaError(f"Unknown command: {name}")
        return handler(document, cfg)
