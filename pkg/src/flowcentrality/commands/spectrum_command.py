import argparse
from typing import TextIO

from ..core.services import linalg
from .base import BaseCommand, command
from .responses import CsvResponse
from .run_config import RunConfig


@command
class SpectrumCommand(BaseCommand):
    help = "Perron root, its multiplicity, eta and det(I - zA)"

    def init_arguments(self, parser: argparse.ArgumentParser) -> None:
        mode = parser.add_mutually_exclusive_group()
        mode.add_argument(
            "--exact",
            dest="exact",
            action="store_const",
            const=True,
            help="Characteristic polynomial over the rationals",
        )
        mode.add_argument(
            "--float",
            dest="exact",
            action="store_const",
            const=False,
            help="Characteristic polynomial in floating point",
        )

    def run(self, run_config: RunConfig, out: TextIO) -> int:
        graph = self.load_graph(run_config)
        settings = run_config.settings(self.config)
        spectrum = linalg.spectrum(graph, exact=run_config.exact, settings=settings)
        response = CsvResponse(
            out,
            run_config.seed,
            ["lambda", "multiplicity", "simple", "eta", "perron_limit", "char_poly"],
        )
        response.row(
            [
                spectrum.lam,
                spectrum.multiplicity,
                spectrum.simple,
                spectrum.eta,
                1.0 / spectrum.eta if spectrum.eta else None,
                spectrum.char_poly.format(),
            ]
        )
        return 0
