"""Tests for command registry"""

import pytest
from pydantic import BaseModel

from covercrimp.cli import SUBCOMMANDS
from covercrimp.commands import CommandRegistry, build_registry
from covercrimp.commands.base import CommandCollection
from covercrimp.commands.command import Command, CommandCategory
from covercrimp.errors import SchemaError


class EchoDocument(BaseModel):
    value: int = 0


class MockCommandCollection(CommandCollection):
    """Mock command collection for testing"""

    def get_commands(self) -> list[Command]:
        return [
            Command(
                name="echo",
                description="Echo the value",
                category=CommandCategory.CURVE,
                document=EchoDocument,
            )
        ]

    def _run_echo(self, document, cfg):
        return {"value": document["value"]}


@pytest.fixture
def registry():
    """Create CommandRegistry instance"""
    return CommandRegistry()


@pytest.fixture
def mock_collection():
    """Create a mock command collection"""
    return MockCommandCollection()


class TestCommandRegistry:
    """Tests for CommandRegistry"""

    def test_register_collection(self, registry, mock_collection):
        registry.register_collection(mock_collection)

        assert registry.get_command("echo").description == "Echo the value"
        assert registry.get_collection_for_command("echo") is mock_collection

    def test_register_duplicate_command(self, registry, mock_collection):
        """Test registering a duplicate command raises error"""
        registry.register_collection(mock_collection)

        with pytest.raises(ValueError, match="registered twice"):
            registry.register_collection(mock_collection)

    def test_get_commands_by_category(self, registry, mock_collection):
        registry.register_collection(mock_collection)

        assert [c.name for c in registry.get_commands_by_category(CommandCategory.CURVE)] == [
            "echo"
        ]
        assert registry.get_commands_by_category(CommandCategory.CRIMP) == []

    def test_unknown_command(self, registry):
        assert registry.get_command("missing") is None
        assert registry.get_collection_for_command("missing") is None

    def test_overview(self, registry, mock_collection):
        registry.register_collection(mock_collection)
        assert registry.overview() == "curve:\n  echo  Echo the value"

    def test_describe_carries_document_schema(self, mock_collection):
        description = mock_collection.get_commands()[0].describe()
        assert description["command"] == "echo"
        assert description["category"] == "curve"
        assert description["details"] is None
        assert "value" in description["input"]["properties"]

    def test_call_dispatches_to_handler(self, mock_collection):
        assert mock_collection.call_command("echo", {"value": 3}, None) == {"value": 3}

    def test_call_missing_handler(self, mock_collection):
        with pytest.raises(SchemaError):
            mock_collection.call_command("absent", {}, None)


class TestBuiltRegistry:
    """Tests for the registry behind the command line"""

    def test_every_subcommand_is_registered(self):
        registry = build_registry()
        for name in SUBCOMMANDS:
            assert registry.get_command(name) is not None
            assert registry.get_collection_for_command(name) is not None

    def test_categories(self):
        registry = build_registry()
        by_category = {
            category: [c.name for c in registry.get_commands_by_category(category)]
            for category in CommandCategory
        }
        assert by_category[CommandCategory.COVER] == ["disc", "validate"]
        assert by_category[CommandCategory.CRIMP] == ["crimps", "iso"]
        assert by_category[CommandCategory.CURVE] == ["rh", "stable"]
        assert by_category[CommandCategory.MONODROMY] == ["hurwitz"]

    def test_overview_lists_every_subcommand(self):
        overview = build_registry().overview()
        assert overview.startswith("cover:\n")
        for name in SUBCOMMANDS:
            assert f"  {name}" in overview

    def test_input_schemas_are_objects(self):
        registry = build_registry()
        for name in SUBCOMMANDS:
            assert registry.get_command(name).describe()["input"]["type"] == "object"
