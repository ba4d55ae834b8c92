from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .errors import UnknownLabelError, VertexIndexError


class VertexSubset(BaseModel, frozen=True):
    """Sorted, duplicate-free vertex indices naming an induced subgraph."""

    members: tuple[int, ...] = Field(default=())

    @field_validator("members")
    @classmethod
    def validate_members(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if any(v < 0 for v in value):
            raise ValueError(f"Vertex indices must be non-negative, got {value}")
        if any(a >= b for a, b in zip(value, value[1:])):
            raise ValueError(
                f"Vertex indices must be sorted and distinct, got {value}"
            )
        return value

    @classmethod
    def of(cls, vertices: Iterable[int]) -> VertexSubset:
        items = [int(v) for v in vertices]
        if len(set(items)) != len(items):
            raise ValueError(f"Duplicate vertex indices in {items}")
        return cls(members=tuple(sorted(items)))

    @classmethod
    def full(cls, n: int) -> VertexSubset:
        return cls(members=tuple(range(n)))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:  # type: ignore[override]
        return iter(self.members)

    def __contains__(self, vertex: object) -> bool:
        return vertex in self.members

    def union(self, other: VertexSubset) -> VertexSubset:
        return VertexSubset(members=tuple(sorted(set(self.members) | set(other.members))))

    def intersection(self, other: VertexSubset) -> VertexSubset:
        return VertexSubset(members=tuple(sorted(set(self.members) & set(other.members))))

    def complement(self, n: int) -> VertexSubset:
        inside = set(self.members)
        return VertexSubset(members=tuple(v for v in range(n) if v not in inside))

    def isdisjoint(self, other: VertexSubset) -> bool:
        return set(self.members).isdisjoint(other.members)


class Graph(BaseModel):
    """Weighted, optionally directed graph over a dense adjacency matrix.

    Undirected graphs are stored as symmetric digraphs: every edge is a pair
    of opposite arcs, so a back-and-forth traversal is a length-2 cycle.
    The empty graph (no vertices) only arises from deleting every vertex.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    labels: tuple[str, ...] = Field()
    directed: bool = Field(default=False)
    adj: np.ndarray = Field()

    @model_validator(mode="before")
    @classmethod
    def validate_input(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        labels = tuple(str(label) for label in data.get("labels", ()))
        n = len(labels)
        adj = np.array(data.get("adj", np.zeros((n, n))), dtype=np.float64)
        if adj.size == 0:
            adj = adj.reshape((n, n))
        if adj.ndim != 2 or adj.shape != (n, n):
            raise ValueError(
                f"Adjacency must be {n}x{n} to match labels, got {adj.shape}"
            )
        if len(set(labels)) != n:
            raise ValueError("Vertex labels must be unique")
        if not data.get("directed", False) and not np.array_equal(adj, adj.T):
            raise ValueError("Undirected graphs need a symmetric adjacency matrix")
        adj.setflags(write=False)
        return {**data, "labels": labels, "adj": adj}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.labels == other.labels
            and self.directed == other.directed
            and np.array_equal(self.adj, other.adj)
        )

    def __hash__(self) -> int:
        return hash((self.labels, self.directed, self.adj.tobytes()))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def nonnegative(self) -> bool:
        return bool(np.all(self.adj >= 0))

    @property
    def integral(self) -> bool:
        return bool(np.all(np.equal(np.mod(self.adj, 1), 0)))

    @property
    def unweighted(self) -> bool:
        return bool(np.all((self.adj == 0) | (self.adj == 1)))

    @property
    def arc_count(self) -> int:
        return int(np.count_nonzero(self.adj))

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownLabelError(label) from None

    def labels_of(self, vertices: Iterable[int]) -> list[str]:
        return [self.labels[v] for v in vertices]

    def check_subset(self, subset: VertexSubset | Sequence[int]) -> None:
        for v in subset:
            if not 0 <= v < self.n:
                raise VertexIndexError(
                    f"Vertex index {v} out of range for a graph with {self.n} vertices"
                )

    @classmethod
    def empty(cls, directed: bool = False) -> Graph:
        return cls(labels=(), directed=directed, adj=np.zeros((0, 0)))
