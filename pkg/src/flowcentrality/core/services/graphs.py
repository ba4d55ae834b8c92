from __future__ import annotations

import io
import logging
import math
from collections.abc import Iterable, Sequence
from typing import TextIO

import networkx as nx
import numpy as np

from ..domain.errors import EmptySubsetError, GraphFormatError
from ..domain.graph import Graph, VertexSubset

logger = logging.getLogger(__name__)


def _split_fields(line: str) -> list[str]:
    if "," in line:
        return [field.strip() for field in line.split(",")]
    if "\t" in line:
        return [field.strip() for field in line.split("\t")]
    return line.split()


def _parse_weight(raw: str, line_number: int) -> float:
    try:
        weight = float(raw)
    except ValueError:
        raise GraphFormatError(f"weight {raw!r} is not a real number", line_number)
    if not math.isfinite(weight):
        raise GraphFormatError(f"weight {raw!r} is not finite", line_number)
    return weight


def load_edge_list(text: str | TextIO, directed: bool = False) -> Graph:
    """Read `src<sep>dst[<sep>weight]` lines into a Graph.

    Separators are a comma, a tab or runs of whitespace. Lines starting with
    `#` and blank lines are skipped. Repeated edges add their weights.
    """
    stream = io.StringIO(text) if isinstance(text, str) else text
    index: dict[str, int] = {}
    arcs: list[tuple[int, int, float]] = []

    for line_number, raw_line in enumerate(stream, start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        fields = _split_fields(line)
        if len(fields) not in (2, 3) or not all(fields[:2]):
            raise GraphFormatError(
                f"expected 'src,dst[,weight]', got {line!r}", line_number
            )
        weight = _parse_weight(fields[2], line_number) if len(fields) == 3 else 1.0
        src, dst = (index.setdefault(label, len(index)) for label in fields[:2])
        arcs.append((src, dst, weight))

    if not arcs:
        raise GraphFormatError("empty input: no edges found")

    n = len(index)
    adj = np.zeros((n, n), dtype=np.float64)
    for src, dst, weight in arcs:
        adj[src, dst] += weight
        if not directed and src != dst:
            adj[dst, src] += weight

    graph = Graph(labels=tuple(index), directed=directed, adj=adj)
    logger.info(
        "Loaded graph: n=%d arcs=%d directed=%s nonnegative=%s",
        graph.n,
        graph.arc_count,
        graph.directed,
        graph.nonnegative,
    )
    return graph


def to_edge_list(g: Graph) -> str:
    """Serialize a graph so that `load_edge_list` rebuilds the same weights."""
    lines = []
    isolated = 0
    for i in range(g.n):
        row = g.adj[i]
        if not row.any() and not g.adj[:, i].any():
            isolated += 1
        for j in range(g.n):
            if row[j] == 0 or (not g.directed and j < i):
                continue
            lines.append(f"{g.labels[i]},{g.labels[j]},{float(row[j])!r}")
    if isolated:
        logger.warning("%d isolated vertices cannot be written as edges", isolated)
    return "\n".join(lines) + "\n"


def _as_indices(g: Graph, h: VertexSubset | Sequence[int]) -> list[int]:
    g.check_subset(h)
    return list(h)


def induced_subgraph(g: Graph, h: VertexSubset) -> Graph:
    keep = _as_indices(g, h)
    if not keep:
        return Graph.empty(directed=g.directed)
    return Graph(
        labels=tuple(g.labels[v] for v in keep),
        directed=g.directed,
        adj=g.adj[np.ix_(keep, keep)],
    )


def delete_vertices(g: Graph, h: VertexSubset) -> Graph:
    """The graph G\\H: vertices of h and every incident edge removed."""
    g.check_subset(h)
    return induced_subgraph(g, h.complement(g.n))


def subset_from_labels(g: Graph, labels: Iterable[str]) -> VertexSubset:
    names = [label.strip() for label in labels]
    repeated = sorted({name for name in names if names.count(name) > 1})
    if repeated:
        raise GraphFormatError(f"Labels listed more than once: {', '.join(repeated)}")
    return VertexSubset.of(g.index_of(name) for name in names)


def skeleton_matrix(g: Graph) -> np.ndarray:
    """Boolean adjacency of the undirected skeleton, self-loops dropped."""
    mask = (g.adj != 0) | (g.adj.T != 0)
    np.fill_diagonal(mask, False)
    return mask


def undirected_skeleton(g: Graph) -> nx.Graph:
    return nx.from_numpy_array(skeleton_matrix(g).astype(np.int8))


def is_connected(g: Graph, h: VertexSubset) -> bool:
    """Weak connectivity of the subgraph induced on h."""
    if not len(h):
        raise EmptySubsetError("Connectivity of an empty vertex set is undefined")
    keep = _as_indices(g, h)
    if len(keep) == 1:
        return True
    mask = skeleton_matrix(g)[np.ix_(keep, keep)]
    return nx.is_connected(nx.from_numpy_array(mask.astype(np.int8)))


def is_strongly_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    digraph = nx.from_numpy_array((g.adj != 0).astype(np.int8), create_using=nx.DiGraph)
    return nx.is_strongly_connected(digraph)


def to_digraph(g: Graph) -> nx.DiGraph:
    """Arc-level view of the graph, weights on the `weight` attribute."""
    digraph = nx.DiGraph()
    digraph.add_nodes_from(range(g.n))
    rows, cols = np.nonzero(g.adj)
    digraph.add_weighted_edges_from(
        (int(i), int(j), float(g.adj[i, j])) for i, j in zip(rows, cols)
    )
    return digraph
