from __future__ import annotations

import logging
from collections.abc import Iterator

import networkx as nx

from ..domain.cycle import SimpleCyclePrime, SimplePath, canonical_rotation
from ..domain.graph import Graph, VertexSubset
from .graphs import skeleton_matrix, to_digraph

logger = logging.getLogger(__name__)


def _arc_product(g: Graph, vertices: tuple[int, ...], closed: bool) -> float:
    arcs = list(zip(vertices, vertices[1:]))
    if closed:
        arcs.append((vertices[-1], vertices[0]))
    weight = 1.0
    for a, b in arcs:
        weight *= float(g.adj[a, b])
    return weight


def simple_cycles(g: Graph, max_len: int | None = None) -> Iterator[SimpleCyclePrime]:
    """Every directed simple cycle once, ordered by (length, vertex sequence).

    An undirected edge is a pair of opposite arcs, so it yields a 2-cycle and
    every longer undirected cycle appears in both orientations.
    """
    if max_len is not None and max_len < 1:
        raise ValueError(f"max_len must be at least 1, got {max_len}")
    found = [
        canonical_rotation(cycle)
        for cycle in nx.simple_cycles(to_digraph(g), length_bound=max_len)
    ]
    found.sort(key=lambda vs: (len(vs), vs))
    logger.debug("Enumerated %d simple cycles (max_len=%s)", len(found), max_len)
    for vertices in found:
        yield SimpleCyclePrime(
            vertices=vertices, weight=_arc_product(g, vertices, closed=True)
        )


def _neighbours(g: Graph) -> list[frozenset[int]]:
    mask = skeleton_matrix(g)
    return [frozenset(int(u) for u in mask[v].nonzero()[0]) for v in range(g.n)]


def connected_subsets(g: Graph, k: int) -> Iterator[VertexSubset]:
    """ESU enumeration of connected k-subsets of the undirected skeleton.

    Each subset is grown from its smallest vertex, and the extension set is
    always popped smallest-first, which fixes the emission order.
    """
    if not 1 <= k <= g.n:
        raise ValueError(f"Subset size must lie in [1, {g.n}], got {k}")
    neighbours = _neighbours(g)

    def extend(
        subset: tuple[int, ...], frontier: frozenset[int], extension: set[int], root: int
    ) -> Iterator[VertexSubset]:
        if len(subset) == k:
            yield VertexSubset.of(subset)
            return
        extension = set(extension)
        while extension:
            w = min(extension)
            extension.discard(w)
            exclusive = {
                u
                for u in neighbours[w]
                if u > root and u not in subset and u not in frontier
            }
            yield from extend(
                subset + (w,),
                frontier | neighbours[w],
                extension | exclusive,
                root,
            )

    for v in range(g.n):
        yield from extend(
            (v,),
            neighbours[v] | {v},
            {u for u in neighbours[v] if u > v},
            v,
        )


def simple_paths(g: Graph, i: int, j: int) -> Iterator[SimplePath]:
    """Simple paths i -> j along arcs; i == j gives only the empty path."""
    g.check_subset((i, j))
    if i == j:
        yield SimplePath(vertices=(i,))
        return
    for vertices in nx.all_simple_paths(to_digraph(g), i, j):
        path = tuple(vertices)
        yield SimplePath(vertices=path, weight=_arc_product(g, path, closed=False))
