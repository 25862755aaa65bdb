"""Finite simplicial graphs and the combinatorial criteria the classifier reduces to.

Vertices keep their declaration order, which fixes every tie-break in this
package (canonical words, witness selection, report output).
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property


@dataclass(frozen=True)
class SimplicialGraph:
    """Undirected graph without loops or multi-edges.

    >>> g = graph("abc", ["ab", "bc"])
    >>> sorted(g.link("b"))
    ['a', 'c']
    >>> g.degree("a")
    1
    """

    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]]

    def __post_init__(self):
        listed = set(self.vertices)
        if len(listed) != len(self.vertices):
            raise ValueError("duplicate vertex ids")
        for e in self.edges:
            if len(e) != 2:
                raise ValueError(f"edge {sorted(e)} must join two distinct vertices")
            if not e <= listed:
                raise ValueError(f"edge {sorted(e)} references undeclared vertices")

    @cached_property
    def _adj(self) -> dict[str, frozenset[str]]:
        nbrs: dict[str, set[str]] = {v: set() for v in self.vertices}
        for e in self.edges:
            u, w = tuple(e)
            nbrs[u].add(w)
            nbrs[w].add(u)
        return {v: frozenset(ws) for v, ws in nbrs.items()}

    @cached_property
    def _order(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def index(self, v: str) -> int:
        return self._order[v]

    def link(self, v: str) -> frozenset[str]:
        return self._adj[v]

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def has_edge(self, u: str, v: str) -> bool:
        return v in self._adj[u]


def graph(vertices, edges=()) -> SimplicialGraph:
    """Build a graph from vertex ids and edge pairs (any iterable of pairs).

    >>> graph("ab", ["ab"]).has_edge("a", "b")
    True
    """
    vs = tuple(vertices)
    es = frozenset(frozenset(e) for e in edges)
    return SimplicialGraph(vs, es)


@dataclass(frozen=True)
class JoinDecomposition:
    """Split of the vertex set into the cone (vertices adjacent to every other
    vertex) and the core (everything else)."""

    cone: tuple[str, ...]
    core: tuple[str, ...]


@dataclass(frozen=True)
class SilWitness:
    """Two vertices at distance >= 2 together with a connected component of the
    graph minus their common link that avoids both of them."""

    u: str
    v: str
    component: frozenset[str]


def complement(g: SimplicialGraph) -> SimplicialGraph:
    """Same vertices, an edge exactly where g has none.

    >>> complement(graph("abc", ["ab", "bc", "ac"])).edges
    frozenset()
    """
    es = frozenset(
        frozenset((u, v))
        for u, v in itertools.combinations(g.vertices, 2)
        if not g.has_edge(u, v)
    )
    return SimplicialGraph(g.vertices, es)


def induced(g: SimplicialGraph, keep) -> SimplicialGraph:
    """Induced subgraph on the given vertices, preserving declaration order."""
    kept = set(keep)
    vs = tuple(v for v in g.vertices if v in kept)
    es = frozenset(e for e in g.edges if e <= kept)
    return SimplicialGraph(vs, es)


def is_complete(g: SimplicialGraph) -> bool:
    n = len(g.vertices)
    return all(g.degree(v) == n - 1 for v in g.vertices)


def join_decompose(g: SimplicialGraph) -> JoinDecomposition:
    """Peel off the cone vertices.

    >>> join_decompose(graph("abc", ["ab", "bc"]))
    JoinDecomposition(cone=('b',), core=('a', 'c'))
    """
    n = len(g.vertices)
    cone = tuple(v for v in g.vertices if g.degree(v) == n - 1)
    core = tuple(v for v in g.vertices if g.degree(v) < n - 1)
    return JoinDecomposition(cone, core)


def matches_complete_join_pairs(g: SimplicialGraph) -> bool:
    """Whether g is a join of a complete graph with copies of two isolated
    vertices (both parts possibly empty).

    Equivalent to: every vertex misses at most one other vertex, i.e. the
    complement has maximum degree <= 1.

    >>> matches_complete_join_pairs(graph("abcd", ["ab", "bc", "cd", "da"]))
    True
    >>> matches_complete_join_pairs(graph("abcd", ["ab", "bc", "cd"]))
    False
    """
    n = len(g.vertices)
    return all(g.degree(v) >= n - 2 for v in g.vertices)


def join_pairs_partition(g: SimplicialGraph):
    """Search for an explicit partition witnessing matches_complete_join_pairs.

    Tries every partition of the vertices into singletons and pairs, and checks
    the join condition by definition: pair blocks are non-edges and every pair
    of vertices in different blocks is an edge.  Returns the blocks (tuples in
    vertex order) or None.  Deliberately a dumb search; it serves as the second
    route in consistency checks.
    """
    vs = list(g.vertices)

    def fits(block, blocks) -> bool:
        if len(block) == 2 and g.has_edge(block[0], block[1]):
            return False
        for b in blocks:
            for x in block:
                for y in b:
                    if not g.has_edge(x, y):
                        return False
        return True

    def search(rest, blocks):
        if not rest:
            return tuple(blocks)
        head, tail = rest[0], rest[1:]
        if fits((head,), blocks):
            found = search(tail, blocks + [(head,)])
            if found is not None:
                return found
        for i, other in enumerate(tail):
            block = (head, other)
            if fits(block, blocks):
                found = search(tail[:i] + tail[i + 1:], blocks + [block])
                if found is not None:
                    return found
        return None

    return search(vs, [])


def distance(g: SimplicialGraph, u: str, v: str) -> float:
    """Graph distance; math.inf when u and v lie in different components."""
    if u == v:
        return 0
    dist = {u: 0}
    q = deque([u])
    while q:
        x = q.popleft()
        for y in g.link(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                if y == v:
                    return dist[y]
                q.append(y)
    return math.inf


def connected_components(g: SimplicialGraph) -> list[frozenset[str]]:
    """Components, ordered by their smallest vertex index."""
    seen: set[str] = set()
    comps = []
    for v in g.vertices:
        if v in seen:
            continue
        comp = {v}
        q = deque([v])
        while q:
            x = q.popleft()
            for y in g.link(x):
                if y not in comp:
                    comp.add(y)
                    q.append(y)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def is_connected(g: SimplicialGraph) -> bool:
    return len(connected_components(g)) <= 1


def girth(g: SimplicialGraph) -> float:
    """Length of a shortest cycle; math.inf for forests.

    >>> girth(graph("abcd", ["ab", "bc", "cd", "da"]))
    4
    >>> girth(graph("abc", ["ab", "bc"]))
    inf
    """
    best = math.inf
    for s in g.vertices:
        dist = {s: 0}
        parent = {s: None}
        q = deque([s])
        while q:
            x = q.popleft()
            for y in g.link(x):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    q.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def find_sil(g: SimplicialGraph):
    """First witness (by vertex order on the pair, then by smallest component
    vertex) of two vertices at distance >= 2 whose common-link removal leaves a
    component avoiding both, or None.

    >>> find_sil(graph("uvw")).component
    frozenset({'w'})
    >>> find_sil(graph("abc", ["ab", "bc"])) is None
    True
    """
    for u, v in itertools.combinations(g.vertices, 2):
        if g.has_edge(u, v):
            continue
        cut = g.link(u) & g.link(v)
        rest = induced(g, [w for w in g.vertices if w not in cut])
        comps = sorted(
            connected_components(rest),
            key=lambda c: min(g.index(w) for w in c),
        )
        for comp in comps:
            if u not in comp and v not in comp:
                return SilWitness(u, v, comp)
    return None


def is_molecular(g: SimplicialGraph) -> bool:
    """Connected, no vertex of degree <= 1, and girth >= 5."""
    if not g.vertices:
        return False
    if not is_connected(g):
        return False
    if any(g.degree(v) <= 1 for v in g.vertices):
        return False
    return girth(g) >= 5


def complement_degrees(g: SimplicialGraph) -> dict[str, int]:
    """Per-vertex degree in the complement (the profile behind the pairs-join test)."""
    n = len(g.vertices)
    return {v: n - 1 - g.degree(v) for v in g.vertices}
