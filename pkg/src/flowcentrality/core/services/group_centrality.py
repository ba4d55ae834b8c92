"""Everett-Borgatti group centralities on the undirected, unweighted skeleton.

Distances are hop counts. Direction and weights are ignored, so directed
inputs are measured on the graph obtained by forgetting arc orientation.
"""

from __future__ import annotations

import logging
import math
from collections import deque
from collections.abc import Collection, Sequence
from functools import cached_property

from ..domain.errors import EmptySubsetError
from ..domain.graph import Graph, VertexSubset
from ..domain.reports import GroupCentralityRow
from .graphs import skeleton_matrix

logger = logging.getLogger(__name__)


def _bfs(
    neighbours: Sequence[Collection[int]],
    sources: Collection[int],
    blocked: Collection[int] = (),
) -> tuple[dict[int, int], dict[int, int]]:
    """Hop distances and geodesic counts from a set of sources."""
    dist = {s: 0 for s in sources}
    sigma = {s: 1 for s in sources}
    queue = deque(sorted(sources))
    while queue:
        v = queue.popleft()
        for w in neighbours[v]:
            if w in blocked:
                continue
            if w not in dist:
                dist[w] = dist[v] + 1
                sigma[w] = 0
                queue.append(w)
            if dist[w] == dist[v] + 1:
                sigma[w] += sigma[v]
    return dist, sigma


class GroupCentralityService:
    def __init__(self, graph: Graph) -> None:
        self.graph = graph
        if graph.directed:
            logger.debug("Group centralities use the undirected skeleton")

    @cached_property
    def neighbours(self) -> list[frozenset[int]]:
        mask = skeleton_matrix(self.graph)
        return [frozenset(int(u) for u in mask[v].nonzero()[0]) for v in range(self.graph.n)]

    @cached_property
    def geodesics(self) -> list[tuple[dict[int, int], dict[int, int]]]:
        return [_bfs(self.neighbours, (u,)) for u in range(self.graph.n)]

    def _members(self, h: VertexSubset) -> set[int]:
        if not len(h):
            raise EmptySubsetError("Group centralities need a non-empty group")
        self.graph.check_subset(h)
        return set(h)

    def degree(self, h: VertexSubset) -> int:
        """Vertices outside h adjacent to at least one member."""
        members = self._members(h)
        reached: set[int] = set()
        for v in members:
            reached |= self.neighbours[v]
        return len(reached - members)

    def degree_normalized(self, h: VertexSubset) -> float:
        outside = self.graph.n - len(h)
        return self.degree(h) / outside if outside else 0.0

    def closeness(self, h: VertexSubset) -> tuple[float, float]:
        """(sum, average) of the distance from the group to every outside vertex.

        Both are infinite when some outside vertex cannot be reached. A group
        covering every vertex has sum and average 0.
        """
        members = self._members(h)
        outside = self.graph.n - len(members)
        if not outside:
            return 0.0, 0.0
        dist, _ = _bfs(self.neighbours, members)
        if len(dist) < self.graph.n:
            return math.inf, math.inf
        total = float(sum(d for v, d in dist.items() if v not in members))
        return total, total / outside

    def betweenness(self, h: VertexSubset) -> float:
        """Sum over pairs {u, v} outside h of the share of u-v geodesics through h."""
        members = self._members(h)
        outside = [v for v in range(self.graph.n) if v not in members]
        total = 0.0
        for index, u in enumerate(outside):
            dist, sigma = self.geodesics[u]
            avoid_dist, avoid_sigma = _bfs(self.neighbours, (u,), blocked=members)
            for v in outside[index + 1 :]:
                if v not in dist:
                    continue
                avoiding = avoid_sigma[v] if avoid_dist.get(v) == dist[v] else 0
                total += (sigma[v] - avoiding) / sigma[v]
        return total

    def row(self, h: VertexSubset) -> GroupCentralityRow:
        closeness_sum, closeness_avg = self.closeness(h)
        return GroupCentralityRow(
            subset=h,
            degree=self.degree(h),
            degree_normalized=self.degree_normalized(h),
            closeness_sum=closeness_sum,
            closeness_avg=closeness_avg,
            betweenness=self.betweenness(h),
        )


def group_degree(g: Graph, h: VertexSubset) -> int:
    return GroupCentralityService(g).degree(h)


def group_degree_normalized(g: Graph, h: VertexSubset) -> float:
    return GroupCentralityService(g).degree_normalized(h)


def group_closeness(g: Graph, h: VertexSubset) -> tuple[float, float]:
    return GroupCentralityService(g).closeness(h)


def group_betweenness(g: Graph, h: VertexSubset) -> float:
    return GroupCentralityService(g).betweenness(h)


def group_centrality_row(g: Graph, h: VertexSubset) -> GroupCentralityRow:
    return GroupCentralityService(g).row(h)
