import logging
import sys

from pydantic import ValidationError

from .commands import build_parser
from .commands.base import BaseCommand, CommandError
from .commands.run_config import RunConfig
from .config import FlowCentralityConfigurations
from .module import provide_injector

logger = logging.getLogger("flowcentrality")


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(
        format="%(levelname)s [%(asctime)s] %(name)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        level=logging.WARNING,
        stream=sys.stderr,
    )
    injector = provide_injector()
    try:
        namespace = build_parser(injector).parse_args(argv)
        logging.getLogger().setLevel(namespace.log_level)
        config = injector.get(FlowCentralityConfigurations)
        run_config = RunConfig.from_namespace(namespace, config)
        command: BaseCommand = namespace.command
        if run_config.out is None:
            return command.execute(run_config, sys.stdout)
        with open(run_config.out, "w", encoding="utf-8", newline="") as out:
            return command.execute(run_config, out)
    except CommandError as exc:
        logger.error(exc.detail)
        return exc.exit_code
    except ValidationError as exc:
        logger.error("Invalid arguments: %s", exc)
        return 1
