from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from functools import cached_property
from itertools import combinations

import numpy as np

from ...config import FlowCentralityConfigurations, default_config
from ..domain.cycle import SimpleCyclePrime
from ..domain.errors import CentralityRangeError, SpectrumError, TooManyPartsError
from ..domain.graph import Graph, VertexSubset
from ..domain.reports import CentralityReport
from ..domain.spectrum import Spectrum
from . import linalg
from .enumeration import simple_paths
from .graphs import is_connected

logger = logging.getLogger(__name__)


class CentralityService:
    """c(H) = det(I - A_{G\\H} / lambda) against one graph.

    lambda is the Perron root of the whole graph, computed once and reused
    for every subset.
    """

    def __init__(
        self,
        graph: Graph,
        settings: FlowCentralityConfigurations | None = None,
        lam: float | None = None,
    ) -> None:
        self.graph = graph
        self.settings = settings or default_config()
        self._lam = lam
        self._cache: dict[tuple[int, ...], float] = {}

    @property
    def lam(self) -> float:
        if self._lam is None:
            self._lam, _ = linalg.spectral_radius(self.graph, settings=self.settings)
        return self._lam

    @cached_property
    def spectrum(self) -> Spectrum:
        return linalg.spectrum(self.graph, exact=False, settings=self.settings)

    def value(self, members: Sequence[int]) -> float:
        key = tuple(members)
        if key not in self._cache:
            self._cache[key] = self.compute(key)
        return self._cache[key]

    def compute(self, members: Sequence[int]) -> float:
        """c(H) without touching the cache."""
        key = tuple(members)
        self.graph.check_subset(key)
        inside = set(key)
        keep = [v for v in range(self.graph.n) if v not in inside]
        block = self.graph.adj[np.ix_(keep, keep)]
        result = linalg.determinant(np.eye(len(keep)) - block / self.lam)
        self._check_range(key, result)
        return result

    def _check_range(self, members: tuple[int, ...], result: float) -> None:
        slack = self.settings.CENTRALITY_SLACK
        if self.graph.nonnegative and not -slack <= result <= 1 + slack:
            raise CentralityRangeError(
                f"c({list(members)}) = {result!r} lies outside [0, 1] on a "
                "nonnegative graph; lambda is likely wrong"
            )

    def values(self, subsets: Iterable[VertexSubset]) -> list[float]:
        return [self.value(s.members) for s in subsets]

    def subgraph_centrality(self, h: VertexSubset) -> CentralityReport:
        return CentralityReport(subset=h, value=self.value(h.members), lambda_used=self.lam)

    def cycle_centrality(self, gamma: SimpleCyclePrime) -> CentralityReport:
        return self.subgraph_centrality(gamma.vertex_set)

    def eigenvector_centrality(self) -> np.ndarray:
        return linalg.dominant_eigenvector(self.graph, settings=self.settings)

    def rank_subsets(self, subsets: Iterable[VertexSubset]) -> list[CentralityReport]:
        """Descending c, ties broken by the label sequence."""
        reports = [self.subgraph_centrality(s) for s in subsets]
        return sorted(
            reports,
            key=lambda r: (-r.value, self.graph.labels_of(r.subset)),
        )

    def _require_simple(self) -> Spectrum:
        spectrum = self.spectrum
        if not spectrum.simple or spectrum.eta is None:
            raise SpectrumError("This relation needs a simple dominant eigenvalue")
        return spectrum

    def projector_pathsum(self, i: int, j: int, max_len: int | None = None) -> float:
        """Sum over simple paths i -> j of lambda^-l(p) W(p) c(p).

        Equals eta * (P_lambda)_ij on undirected graphs with a simple Perron root.
        """
        if self.graph.directed:
            logger.warning("The projector relation is only established for undirected graphs")
        self._require_simple()
        max_len = self.graph.n - 1 if max_len is None else max_len
        if max_len < self.graph.n - 1:
            logger.warning(
                "max_len=%d < n-1=%d: long simple paths are skipped",
                max_len,
                self.graph.n - 1,
            )
        total = 0.0
        for path in simple_paths(self.graph, i, j):
            if path.length > max_len:
                continue
            total += self.lam ** (-path.length) * path.weight * self.value(path.vertex_set.members)
        return total

    def adjugate_pathsum(self, i: int, j: int, z: float) -> float:
        """Adj(I - zA)_ij expanded as a sum over simple paths i -> j."""
        n = self.graph.n
        total = 0.0
        for path in simple_paths(self.graph, i, j):
            inside = set(path.vertices)
            keep = [v for v in range(n) if v not in inside]
            block = self.graph.adj[np.ix_(keep, keep)]
            total += z**path.length * path.weight * linalg.determinant(np.eye(len(keep)) - z * block)
        return total

    def _alternating_sum(self, sets: Sequence[frozenset[int]], term) -> float:
        total = 0.0
        for size in range(1, len(sets) + 1):
            sign = 1.0 if size % 2 else -1.0
            for chosen in combinations(sets, size):
                total += sign * term(chosen)
        return total

    def _check_parts(self, count: int) -> None:
        cap = self.settings.MAX_INCLUSION_EXCLUSION_PARTS
        if count > cap:
            raise TooManyPartsError(
                f"{count} parts need 2^{count} terms (cap {cap}); "
                "evaluate c on the union directly instead"
            )

    def union_centrality_ie(self, parts: Sequence[VertexSubset]) -> float:
        """Inclusion-exclusion over intersections: sum (-1)^{|S|-1} c(cap S)."""
        if not parts:
            raise ValueError("Inclusion-exclusion needs at least one part")
        self._check_parts(len(parts))
        for part in parts:
            if not len(part) or not is_connected(self.graph, part):
                logger.warning("Part %s is not a connected subgraph", list(part))

        def intersection_value(chosen: tuple[frozenset[int], ...]) -> float:
            common = frozenset.intersection(*chosen)
            return self.value(sorted(common)) if common else 0.0

        return self._alternating_sum([frozenset(p) for p in parts], intersection_value)

    def flow_overlap(self, s: VertexSubset) -> float:
        """Fraction of flows intercepted by every vertex of s."""
        self._check_parts(len(s))
        singletons = [frozenset((v,)) for v in s]

        def union_value(chosen: tuple[frozenset[int], ...]) -> float:
            return self.value(sorted(frozenset.union(*chosen)))

        return self._alternating_sum(singletons, union_value)

    def overlap_expansion(self, s: VertexSubset) -> float:
        """c(s) rebuilt from eta * eig(v)^2 and the higher flow overlaps."""
        spectrum = self._require_simple()
        if spectrum.dominant_vector is None:
            raise SpectrumError("The expansion needs a connected nonnegative graph")
        self._check_parts(len(s))
        vector = spectrum.dominant_vector
        total = float(sum(spectrum.eta * vector[v] ** 2 for v in s))
        for size in range(2, len(s) + 1):
            sign = 1.0 if size % 2 else -1.0
            for chosen in combinations(s.members, size):
                total += sign * self.flow_overlap(VertexSubset(members=chosen))
        return total


def subgraph_centrality(g: Graph, h: VertexSubset) -> CentralityReport:
    return CentralityService(g).subgraph_centrality(h)


def cycle_centrality(g: Graph, gamma: SimpleCyclePrime) -> CentralityReport:
    return CentralityService(g).cycle_centrality(gamma)


def eigenvector_centrality(g: Graph) -> np.ndarray:
    return CentralityService(g).eigenvector_centrality()


def projector_pathsum(g: Graph, i: int, j: int, max_len: int | None = None) -> float:
    return CentralityService(g).projector_pathsum(i, j, max_len)


def union_centrality_ie(g: Graph, parts: Sequence[VertexSubset]) -> float:
    return CentralityService(g).union_centrality_ie(parts)


def flow_overlap(g: Graph, s: VertexSubset) -> float:
    return CentralityService(g).flow_overlap(s)
