#!/usr/bin/env python3
"""Output every subcommand with its description and input schema"""

import json
import sys
from pathlib import Path

# Add backend directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "backend"))

from covercrimp.commands import build_registry  # noqa: E402
from covercrimp.commands.command import CommandCategory  # noqa: E402


def main():
    registry = build_registry()

    for category in CommandCategory:
        commands = registry.get_commands_by_category(category)
        if not commands:
            continue
        print(f"## {category.value}\n")
        for command in commands:
            print(f"### {command.name}\n")
            print(command.description)
            if command.detailed_description:
                print(f"\n{command.detailed_description}")
            print("\n```json")
            print(json.dumps(command.schema, indent=2, sort_keys=True))
            print("```\n")

    print("=" * 80)
    print(registry.overview())


if __name__ == "__main__":
    main()
