from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from enum import StrEnum
from itertools import batched

from ...config import FlowCentralityConfigurations, default_config
from ..domain.errors import BudgetExceededError
from ..domain.graph import Graph, VertexSubset
from ..domain.reports import DistributionRow
from . import linalg
from .centrality import CentralityService
from .enumeration import connected_subsets
from .graphs import skeleton_matrix
from .group_centrality import GroupCentralityService

logger = logging.getLogger(__name__)

CHUNK_SIZE = 512


class Baselines(StrEnum):
    DEGREE = "degree"
    ALL = "all"


def estimate_connected_subsets(g: Graph, k: int) -> int:
    """Upper bound n * (e * max_degree)^(k-1) / k on the connected k-subsets."""
    if g.n == 0:
        return 0
    max_degree = int(skeleton_matrix(g).sum(axis=1).max())
    if k == 1 or max_degree == 0:
        return g.n
    return math.ceil(g.n * (math.e * max_degree) ** (k - 1) / k)


Evaluation = tuple[VertexSubset, float, int, tuple[float, float] | None, float | None]

_worker: tuple[CentralityService, GroupCentralityService, Baselines] | None = None


def _init_worker(
    graph: Graph, lam: float, settings: FlowCentralityConfigurations, baselines: Baselines
) -> None:
    global _worker
    _worker = (
        CentralityService(graph, settings, lam=lam),
        GroupCentralityService(graph),
        baselines,
    )


def _evaluate_chunk(chunk: tuple[VertexSubset, ...]) -> list[Evaluation]:
    assert _worker is not None
    centrality, groups, baselines = _worker
    out = []
    for subset in chunk:
        value = centrality.compute(subset.members)
        closeness = betweenness = None
        if baselines is Baselines.ALL:
            closeness = groups.closeness(subset)
            betweenness = groups.betweenness(subset)
        out.append(
            (
                subset,
                value,
                groups.degree(subset),
                closeness,
                betweenness,
            )
        )
    return out


def _evaluate(
    graph: Graph,
    lam: float,
    settings: FlowCentralityConfigurations,
    baselines: Baselines,
    subsets: Iterable[VertexSubset],
    workers: int,
) -> Iterator[Evaluation]:
    chunks = batched(subsets, CHUNK_SIZE)
    if workers <= 1:
        _init_worker(graph, lam, settings, baselines)
        for chunk in chunks:
            yield from _evaluate_chunk(chunk)
        return
    logger.debug("Fanning out subset evaluation to %d workers", workers)
    with ProcessPoolExecutor(
        max_workers=workers,
        initializer=_init_worker,
        initargs=(graph, lam, settings, baselines),
    ) as pool:
        for evaluated in pool.map(_evaluate_chunk, chunks):
            yield from evaluated


def centrality_distribution(
    g: Graph,
    k: int,
    baselines: Baselines = Baselines.DEGREE,
    workers: int | None = None,
    budget: int | None = None,
    settings: FlowCentralityConfigurations | None = None,
) -> list[DistributionRow]:
    """c and the group baselines of every connected k-subset.

    Rows come back sorted by descending c, ties broken by the label
    sequence, with c and the group degree also divided by their maxima.
    """
    settings = settings or default_config()
    workers = workers or settings.WORKERS
    budget = budget or settings.DISTRIBUTION_BUDGET
    estimate = estimate_connected_subsets(g, k)
    if estimate > budget:
        raise BudgetExceededError(f"Connected {k}-subsets", estimate, budget)
    logger.info("Up to %d connected %d-subsets to evaluate", estimate, k)

    lam, _ = linalg.spectral_radius(g, settings=settings)
    evaluated = list(
        _evaluate(g, lam, settings, baselines, connected_subsets(g, k), workers)
    )
    if not evaluated:
        return []
    top_value = max(e[1] for e in evaluated)
    top_degree = max(e[2] for e in evaluated)

    rows = [
        DistributionRow(
            subset=subset,
            value=value,
            normalized=value / top_value if top_value else 0.0,
            degree=degree,
            degree_normalized=degree / top_degree if top_degree else 0.0,
            closeness_sum=closeness[0] if closeness else None,
            closeness_avg=closeness[1] if closeness else None,
            betweenness=betweenness,
        )
        for subset, value, degree, closeness, betweenness in evaluated
    ]
    return sorted(rows, key=lambda r: (-r.value, g.labels_of(r.subset)))
