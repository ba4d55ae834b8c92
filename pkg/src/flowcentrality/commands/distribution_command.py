import argparse
from typing import TextIO

from ..core.services.distribution import Baselines, centrality_distribution
from .base import BaseCommand, CommandError, command
from .responses import CsvResponse, labels_cell
from .run_config import RunConfig


@command
class DistributionCommand(BaseCommand):
    help = "c over every connected k-subset, sorted for histogram plotting"

    def init_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--k", type=int, help="Subset size")
        parser.add_argument(
            "--baselines",
            choices=[b.value for b in Baselines],
            help="Group baselines per subset; closeness and betweenness are costly",
        )

    def run(self, run_config: RunConfig, out: TextIO) -> int:
        if run_config.k is None:
            raise CommandError(1, f"{self.name}: --k is required")
        graph = self.load_graph(run_config)
        if run_config.k > graph.n:
            raise CommandError(
                1, f"{self.name}: --k {run_config.k} exceeds the {graph.n} vertices"
            )
        baselines = Baselines(run_config.baselines)
        rows = centrality_distribution(
            graph,
            run_config.k,
            baselines=baselines,
            workers=run_config.workers,
            budget=run_config.budget,
            settings=run_config.settings(self.config),
        )

        header = ["subset", "c", "c_normalized", "degree", "degree_normalized"]
        if baselines is Baselines.ALL:
            header += ["closeness_sum", "closeness_avg", "betweenness"]
        response = CsvResponse(out, run_config.seed, header)
        for row in rows:
            values = [
                labels_cell(graph, row.subset),
                row.value,
                row.normalized,
                row.degree,
                row.degree_normalized,
            ]
            if baselines is Baselines.ALL:
                values += [row.closeness_sum, row.closeness_avg, row.betweenness]
            response.row(values)
        return 0
