import argparse
import logging

from injector import Injector, Module, provider

from ..config import FlowCentralityConfigurations
from .base import BaseCommand, Commands, CommandParser
from .centrality_command import CentralityCommand
from .cycles_command import CyclesCommand
from .distribution_command import DistributionCommand
from .spectrum_command import SpectrumCommand
from .verify_command import VerifyCommand

logger = logging.getLogger(__name__)


class CommandModule(Module):
    @provider
    def provide_spectrum_command(self, config: FlowCentralityConfigurations) -> SpectrumCommand:
        return SpectrumCommand(config=config)

    @provider
    def provide_centrality_command(
        self, config: FlowCentralityConfigurations
    ) -> CentralityCommand:
        return CentralityCommand(config=config)

    @provider
    def provide_distribution_command(
        self, config: FlowCentralityConfigurations
    ) -> DistributionCommand:
        return DistributionCommand(config=config)

    @provider
    def provide_cycles_command(self, config: FlowCentralityConfigurations) -> CyclesCommand:
        return CyclesCommand(config=config)

    @provider
    def provide_verify_command(self, config: FlowCentralityConfigurations) -> VerifyCommand:
        return VerifyCommand(config=config)


def common_options() -> argparse.ArgumentParser:
    """Flags shared by every subcommand."""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--input", help="Edge list: src,dst[,weight] per line")
    parser.add_argument("--directed", action="store_true", help="Read edges as arcs")
    parser.add_argument("--out", help="Output file (default: stdout)")
    parser.add_argument("--workers", type=int, help="Worker processes")
    parser.add_argument("--budget", type=int, help="Cap on enumerated subsets or hikes")
    parser.add_argument("--seed", type=int, help="Seed of the randomized graph battery")
    parser.add_argument(
        "--tolerance",
        type=float,
        help="Root multiplicity tolerance and verification comparison tolerance",
    )
    return parser


def register_commands_to_parser(
    parser: argparse.ArgumentParser, injector: Injector
) -> argparse.ArgumentParser:
    subparsers = parser.add_subparsers(dest="subcommand", required=True)
    parents = [common_options()]
    for command in Commands.commands:
        logger.debug("Discovered command %s", command.__name__)
        instance: BaseCommand = injector.get(command)
        instance.register(subparsers, parents)
    return parser


def build_parser(injector: Injector) -> argparse.ArgumentParser:
    parser = CommandParser(
        prog="flowcentrality",
        description="Flow centrality of vertex groups and the hike sieve behind it",
    )
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
    )
    return register_commands_to_parser(parser, injector)
