from __future__ import annotations

from collections.abc import Sequence

from pydantic import BaseModel, Field, field_validator

from .graph import VertexSubset


def canonical_rotation(vertices: Sequence[int]) -> tuple[int, ...]:
    """Rotate a cyclic sequence so that its smallest vertex comes first."""
    if not vertices:
        return ()
    start = min(range(len(vertices)), key=vertices.__getitem__)
    return tuple(vertices[start:]) + tuple(vertices[:start])


class SimpleCyclePrime(BaseModel, frozen=True):
    """A simple cycle, stored in canonical rotation.

    `vertices` lists the cycle in traversal order; the closing arc runs from
    the last vertex back to the first. A self-loop is a 1-vertex cycle, a
    back-and-forth traversal of an undirected edge a 2-vertex cycle.
    """

    vertices: tuple[int, ...] = Field(min_length=1)
    weight: float = Field(default=1.0)

    @field_validator("vertices")
    @classmethod
    def validate_vertices(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if len(set(value)) != len(value):
            raise ValueError(f"Cycle revisits a vertex: {value}")
        if value != canonical_rotation(value):
            raise ValueError(f"Cycle is not in canonical rotation: {value}")
        return value

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def vertex_set(self) -> VertexSubset:
        return VertexSubset.of(self.vertices)

    @property
    def arcs(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.length, self.vertices)

    def meets(self, other: SimpleCyclePrime) -> bool:
        return not set(self.vertices).isdisjoint(other.vertices)


class SimplePath(BaseModel, frozen=True):
    """A path visiting distinct vertices; a single vertex is the empty path."""

    vertices: tuple[int, ...] = Field(min_length=1)
    weight: float = Field(default=1.0)

    @field_validator("vertices")
    @classmethod
    def validate_vertices(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if len(set(value)) != len(value):
            raise ValueError(f"Path revisits a vertex: {value}")
        return value

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def vertex_set(self) -> VertexSubset:
        return VertexSubset.of(self.vertices)
