import argparse
from typing import TextIO

from ..core.domain.graph import Graph, VertexSubset
from ..core.services.centrality import CentralityService
from ..core.services.graphs import subset_from_labels
from ..core.services.group_centrality import GroupCentralityService
from .base import BaseCommand, CommandError, command
from .responses import CsvResponse, labels_cell, percent
from .run_config import RunConfig

HEADER = [
    "subset",
    "c",
    "c_percent",
    "degree",
    "degree_normalized",
    "closeness_sum",
    "closeness_avg",
    "betweenness",
]


@command
class CentralityCommand(BaseCommand):
    help = "c(H) next to the group degree, closeness and betweenness of each subset"

    def init_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            "--subsets",
            help="File with one comma-separated list of vertex labels per line",
        )

    def read_subsets(self, graph: Graph, run_config: RunConfig) -> list[VertexSubset]:
        if run_config.subsets is None:
            raise CommandError(1, f"{self.name}: --subsets is required")
        try:
            with open(run_config.subsets, encoding="utf-8") as stream:
                lines = [line.strip() for line in stream]
        except OSError as exc:
            raise CommandError(2, f"Cannot read {run_config.subsets}: {exc.strerror}") from exc
        return [
            subset_from_labels(graph, line.split(","))
            for line in lines
            if line and not line.startswith("#")
        ]

    def run(self, run_config: RunConfig, out: TextIO) -> int:
        graph = self.load_graph(run_config)
        subsets = self.read_subsets(graph, run_config)
        centrality = CentralityService(graph, run_config.settings(self.config))
        groups = GroupCentralityService(graph)

        response = CsvResponse(out, run_config.seed, HEADER)
        for subset in subsets:
            report = centrality.subgraph_centrality(subset)
            row = groups.row(subset)
            response.row(
                [
                    labels_cell(graph, subset),
                    report.value,
                    percent(report.value),
                    row.degree,
                    row.degree_normalized,
                    row.closeness_sum,
                    row.closeness_avg,
                    row.betweenness,
                ]
            )
        return 0
