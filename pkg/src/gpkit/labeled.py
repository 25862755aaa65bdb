"""A simplicial graph together with one group descriptor per vertex."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import SimplicialGraph
from .groups import GroupDescriptor


@dataclass(frozen=True)
class LabeledGraph:
    """The defining data of a graph product: graph plus vertex-group labels.

    labels[i] belongs to graph.vertices[i].
    """

    graph: SimplicialGraph
    labels: tuple[GroupDescriptor, ...]

    def __post_init__(self):
        if not self.graph.vertices:
            raise ValueError("labeled graphs must have at least one vertex")
        if len(self.labels) != len(self.graph.vertices):
            raise ValueError("one descriptor per vertex required")

    def label(self, v: str) -> GroupDescriptor:
        return self.labels[self.graph.index(v)]


def labeled(g: SimplicialGraph, by_vertex) -> LabeledGraph:
    """Build a LabeledGraph from a mapping vertex -> descriptor."""
    return LabeledGraph(g, tuple(by_vertex[v] for v in g.vertices))


def uniform(g: SimplicialGraph, desc: GroupDescriptor) -> LabeledGraph:
    """Label every vertex with the same descriptor."""
    return LabeledGraph(g, tuple(desc for _ in g.vertices))
