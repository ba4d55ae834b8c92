import argparse
from typing import TextIO

from ..core.services.centrality import CentralityService
from ..core.services.enumeration import simple_cycles
from .base import BaseCommand, command
from .responses import CsvResponse, labels_cell
from .run_config import RunConfig


@command
class CyclesCommand(BaseCommand):
    help = "Simple cycles ranked by c, grouped by vertex set"

    def init_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--max-len", dest="max_len", type=int, help="Longest cycle")

    def run(self, run_config: RunConfig, out: TextIO) -> int:
        graph = self.load_graph(run_config)
        centrality = CentralityService(graph, run_config.settings(self.config))
        ranked = sorted(
            (
                (centrality.cycle_centrality(gamma).value, gamma)
                for gamma in simple_cycles(graph, run_config.max_len)
            ),
            key=lambda item: (
                -item[0],
                graph.labels_of(item[1].vertex_set),
                item[1].sort_key(),
            ),
        )
        response = CsvResponse(out, run_config.seed, ["vertex_set", "cycle", "length", "c"])
        for value, gamma in ranked:
            response.row(
                [
                    labels_cell(graph, gamma.vertex_set),
                    labels_cell(graph, gamma.vertices),
                    gamma.length,
                    value,
                ]
            )
        return 0
