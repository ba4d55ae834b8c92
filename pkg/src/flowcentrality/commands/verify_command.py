import argparse
import logging
from typing import TextIO

from ..core.domain.errors import VerificationFailure
from ..core.services.verification import Suite, VerificationService
from .base import BaseCommand, CommandError, command
from .responses import CsvResponse
from .run_config import RunConfig

logger = logging.getLogger(__name__)

HEADER = [
    "suite",
    "graph",
    "subject",
    "ell",
    "expected",
    "observed",
    "ratio",
    "centrality",
    "status",
]


@command
class VerifyCommand(BaseCommand):
    help = "Run an exact or property verification suite"

    def init_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("suite", choices=[s.value for s in Suite])
        parser.add_argument(
            "--max-len", dest="max_len", type=int, help="Longest hike enumerated (default 10)"
        )
        parser.add_argument(
            "--k-max", dest="k_max", type=int, help="Longest walk in the asymptotic suite (default 40)"
        )

    def run(self, run_config: RunConfig, out: TextIO) -> int:
        if run_config.suite is None:
            raise CommandError(1, f"{self.name}: a suite is required")
        user_graph = self.load_graph(run_config) if run_config.input else None
        service = VerificationService(
            settings=run_config.settings(self.config),
            seed=run_config.seed,
            max_len=run_config.max_len or 10,
            k_max=run_config.k_max,
            tolerance=run_config.tolerance or 1e-6,
        )
        rows = service.run(Suite(run_config.suite), user_graph)

        response = CsvResponse(out, run_config.seed, HEADER)
        for row in rows:
            response.row(
                [
                    row.suite,
                    row.graph,
                    row.subject,
                    row.ell,
                    row.expected,
                    row.observed,
                    row.ratio,
                    row.centrality,
                    row.status.value,
                ]
            )
        failures = [row for row in rows if row.failed]
        if failures:
            raise VerificationFailure(
                f"{len(failures)} of {len(rows)} {run_config.suite} checks failed"
            )
        logger.info("%s: %d checks passed", run_config.suite, len(rows))
        return 0
