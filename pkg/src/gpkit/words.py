"""Elements of a graph product in canonical normal form.

A word is a sequence of syllables (vertex, non-identity factor element).
Reduction repeatedly deletes identity syllables and merges two syllables on the
same vertex whenever everything strictly between them commutes with that
vertex.  Among the reduced words obtained from each other by swapping adjacent
commuting syllables, the canonical representative is the lexicographically
least under the vertex declaration order; it is computed greedily by always
emitting the least syllable that can be moved to the front.  Equality of group
elements is then equality of canonical words.

Vertex groups must be computable: finite tables, finite cyclic groups, or the
infinite cyclic group (syllable elements are then non-zero exponents).  Opaque
descriptors are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .groups import GroupDescriptor, concrete_table
from .labeled import LabeledGraph


class BadSyllable(ValueError):
    """Syllable with an unknown vertex or an element invalid for its factor."""

    def __init__(self, vertex, element, why=""):
        self.vertex = vertex
        self.element = element
        super().__init__(f"bad syllable ({vertex!r}, {element!r}){': ' + why if why else ''}")


class SameVertex(ValueError):
    """Retraction target vertices must be distinct."""


class VerticesAdjacent(ValueError):
    """Retraction target vertices must be non-adjacent."""


@dataclass(frozen=True)
class Syllable:
    vertex: str
    element: int


@dataclass(frozen=True)
class NormalWord:
    """Canonical-form element; the empty tuple is the identity."""

    syllables: tuple[Syllable, ...]

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    def __len__(self) -> int:
        return len(self.syllables)


IDENTITY = NormalWord(())


class _Factor:
    """Multiplication in one vertex group, on raw element codes (0 = identity)."""

    finite = True

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def valid(self, a) -> bool:
        raise NotImplementedError

    def nontrivial_elements(self):
        raise NotImplementedError


class _TableFactor(_Factor):
    def __init__(self, table):
        self.table = table

    def mul(self, a, b):
        return self.table.mul(a, b)

    def inv(self, a):
        return self.table.inv(a)

    def valid(self, a):
        return 0 <= a < self.table.order

    def nontrivial_elements(self):
        return range(1, self.table.order)


class _IntFactor(_Factor):
    finite = False

    def mul(self, a, b):
        return a + b

    def inv(self, a):
        return -a

    def valid(self, a):
        return isinstance(a, int)

    def nontrivial_elements(self):
        raise ValueError("infinite cyclic factors cannot be enumerated")


def _build_factor(desc: GroupDescriptor) -> _Factor:
    if desc.kind == "Z":
        return _IntFactor()
    if desc.kind == "opaque":
        raise ValueError("opaque vertex groups are not computable; the word engine rejects them")
    return _TableFactor(concrete_table(desc))


@lru_cache(maxsize=None)
def _ops(ctx: LabeledGraph):
    factors = {v: _build_factor(ctx.label(v)) for v in ctx.graph.vertices}
    return ctx.graph._order, ctx.graph._adj, factors


def normal_form(raw, ctx: LabeledGraph) -> NormalWord:
    """Canonical word for any syllable sequence (identity syllables allowed).

    Raises BadSyllable on unknown vertices or out-of-range elements.
    """
    order, adj, factors = _ops(ctx)
    word: list[tuple[str, int]] = []
    for s in raw:
        f = factors.get(s.vertex)
        if f is None:
            raise BadSyllable(s.vertex, s.element, "unknown vertex")
        if not f.valid(s.element):
            raise BadSyllable(s.vertex, s.element, "element outside the vertex group")
        if s.element != 0:
            word.append((s.vertex, s.element))
    word = _reduce(word, adj, factors)
    word = _canonical(word, order, adj)
    return NormalWord(tuple(Syllable(v, e) for v, e in word))


def _reduce(word, adj, factors):
    """Delete identities and merge same-vertex syllables across commuting blocks."""
    changed = True
    while changed:
        changed = False
        n = len(word)
        for i in range(n):
            vi, ei = word[i]
            for j in range(i + 1, n):
                vj, ej = word[j]
                if vj == vi:
                    e = factors[vi].mul(ei, ej)
                    del word[j]
                    if e == 0:
                        del word[i]
                    else:
                        word[i] = (vi, e)
                    changed = True
                    break
                if vj not in adj[vi]:
                    break
            if changed:
                break
    return word


def _canonical(word, order, adj):
    """Lexicographically least reordering reachable by commuting swaps.

    A syllable may move to the front iff every earlier syllable commutes with
    it; greedily emitting the least movable syllable yields the minimum.
    """
    out = []
    rem = list(word)
    while rem:
        best = None
        for i, (v, e) in enumerate(rem):
            if any(rem[k][0] not in adj[v] for k in range(i)):
                continue
            key = (order[v], e)
            if best is None or key < best[0]:
                best = (key, i)
        out.append(rem.pop(best[1]))
    return out


def word_of(ctx: LabeledGraph, *pairs) -> NormalWord:
    """Convenience: normal form of (vertex, element) pairs."""
    return normal_form([Syllable(v, e) for v, e in pairs], ctx)


def multiply(w1: NormalWord, w2: NormalWord, ctx: LabeledGraph) -> NormalWord:
    return normal_form(w1.syllables + w2.syllables, ctx)


def invert(w: NormalWord, ctx: LabeledGraph) -> NormalWord:
    _, _, factors = _ops(ctx)
    rev = [Syllable(s.vertex, factors[s.vertex].inv(s.element))
           for s in reversed(w.syllables)]
    return normal_form(rev, ctx)


def conjugate(w: NormalWord, by: NormalWord, ctx: LabeledGraph) -> NormalWord:
    """by * w * by^-1."""
    return multiply(multiply(by, w, ctx), invert(by, ctx), ctx)


def retract(w: NormalWord, u: str, v: str, ctx: LabeledGraph) -> NormalWord:
    """Project onto the free product of the u and v vertex groups.

    Kills every syllable on other vertices, then renormalizes.  This is a group
    homomorphism precisely because u and v are required to be non-adjacent.
    """
    order, adj, _ = _ops(ctx)
    if u not in order or v not in order:
        raise BadSyllable(u if u not in order else v, 0, "unknown vertex")
    if u == v:
        raise SameVertex(f"retraction needs two distinct vertices, got {u!r} twice")
    if v in adj[u]:
        raise VerticesAdjacent(f"vertices {u!r} and {v!r} are adjacent")
    kept = [s for s in w.syllables if s.vertex in (u, v)]
    return normal_form(kept, ctx)


def commutes_with_all_generators(w: NormalWord, ctx: LabeledGraph) -> bool:
    """Whether w is central: commutator with every vertex-group element dies.

    Requires all vertex groups finite.
    """
    _, _, factors = _ops(ctx)
    w_inv = invert(w, ctx)
    for v in ctx.graph.vertices:
        f = factors[v]
        if not f.finite:
            raise ValueError("centrality scan requires finite vertex groups")
        for e in f.nontrivial_elements():
            s = NormalWord((Syllable(v, e),))
            s_inv = NormalWord((Syllable(v, f.inv(e)),))
            comm = multiply(multiply(w, s, ctx), multiply(w_inv, s_inv, ctx), ctx)
            if not comm.is_identity:
                return False
    return True
