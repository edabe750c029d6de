import argparse

from girthroot.cli.commands import gadget, gen, oracle, power, recognize, roots, treeroot

COMMANDS = (power, roots, recognize, treeroot, gadget, oracle, gen)

def include_commands(subparsers: argparse._SubParsersAction) -> None:
    for command in COMMANDS:
        command.register(subparsers)
