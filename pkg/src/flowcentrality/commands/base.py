import abc
import argparse
import re
from typing import TextIO, TypeVar

from ..config import FlowCentralityConfigurations
from ..core.domain.errors import FlowCentralityError, VerificationFailure
from ..core.domain.graph import Graph
from ..core.services.graphs import load_edge_list
from .run_config import RunConfig


def camel_to_words(name: str) -> str:
    # Replace capital letters with ` ` + lowercase letter
    return " ".join(re.sub(r"(?<!^)(?=[A-Z])", " ", name).lower().split())


class CommandError(Exception):
    """Failure carrying the process exit code: 1 usage, 2 data, 3 verification."""

    def __init__(self, exit_code: int, detail: str) -> None:
        self.exit_code = exit_code
        self.detail = detail
        super().__init__(detail)


class CommandParser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise CommandError(1, f"{self.prog}: {message}")


class BaseCommand(abc.ABC):
    help: str = ""

    def __init__(self, config: FlowCentralityConfigurations) -> None:
        self.config = config
        self.name = camel_to_words(
            self.__class__.__name__.removesuffix("Command")
        ).replace(" ", "-")

    def register(
        self, subparsers: argparse._SubParsersAction, parents: list[argparse.ArgumentParser]
    ) -> argparse.ArgumentParser:
        parser = subparsers.add_parser(self.name, help=self.help, parents=parents)
        self.init_arguments(parser)
        parser.set_defaults(command=self)
        return parser

    @abc.abstractmethod
    def init_arguments(self, parser: argparse.ArgumentParser) -> None: ...

    @abc.abstractmethod
    def run(self, run_config: RunConfig, out: TextIO) -> int: ...

    def load_graph(self, run_config: RunConfig) -> Graph:
        if run_config.input is None:
            raise CommandError(1, f"{self.name}: --input is required")
        try:
            with open(run_config.input, encoding="utf-8") as stream:
                return load_edge_list(stream, directed=run_config.directed)
        except OSError as exc:
            raise CommandError(2, f"Cannot read {run_config.input}: {exc.strerror}") from exc

    def execute(self, run_config: RunConfig, out: TextIO) -> int:
        try:
            return self.run(run_config, out)
        except VerificationFailure as exc:
            raise CommandError(3, str(exc)) from exc
        except FlowCentralityError as exc:
            raise CommandError(2, str(exc)) from exc


T = TypeVar("T", bound=BaseCommand)


class Commands:
    commands = list[type[BaseCommand]]()

    @classmethod
    def register(cls, command: type[BaseCommand]) -> None:
        cls.commands.append(command)


def command(cls: type[T]) -> type[T]:
    """Register a command to a centralized registry"""
    Commands.register(cls)
    return cls
