"""Command representation and categories"""

from dataclasses import dataclass
from enum import Enum
from typing import Any

from pydantic import BaseModel


class CommandCategory(Enum):
    """Categories for organizing commands"""

    COVER = "cover"
    CRIMP = "crimp"
    CURVE = "curve"
    MONODROMY = "monodromy"


@dataclass
class Command:
    """A subcommand with its input document model"""

    name: str
    description: str
    category: CommandCategory
    document: type[BaseModel]
    detailed_description: str | None = None
    schema: dict[str, Any] | None = None

    def __post_init__(self):
        if self.schema is None:
            self.schema = self.document.model_json_schema()

    def describe(self) -> dict[str, Any]:
        """Description and JSON schema of the input document"""
        return {
            "command": self.name,
            "category": self.category.value,
            "description": self.description,
            "details": self.detailed_description,
            "input": self.schema,
        }

    def __str__(self) -> str:
        return f"Command(name={self.name}, category={self.category.value})"
