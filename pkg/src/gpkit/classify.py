"""Verdicts for the classification statements, with reason traces.

Each classification is a disjunction or conjunction of clauses over the join
decomposition of the defining graph and the central-quotient flags of the
vertex groups.  Verdicts are tri-valued: an opaque label can leave a clause
undecided, but a satisfied clause of a disjunction decides the verdict
regardless of unknowns elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    JoinDecomposition,
    SimplicialGraph,
    find_sil,
    induced,
    is_complete,
    is_molecular,
    join_decompose,
    join_pairs_partition,
    matches_complete_join_pairs,
)
from .groups import NO, UNKNOWN, YES, is_finite, is_z2, order_of, quotient_flags
from .labeled import LabeledGraph

SQ_UNIVERSAL = "sq_universal"
MANY_QUASIMORPHISMS = "many_quasimorphisms"
NOT_BOUNDEDLY_GENERATED = "not_boundedly_generated"
ADMISSIBLE_PROPERTIES = (SQ_UNIVERSAL, MANY_QUASIMORPHISMS, NOT_BOUNDEDLY_GENERATED)

_PROPERTY_TEXT = {
    SQ_UNIVERSAL: "SQ-universality",
    MANY_QUASIMORPHISMS: "many quasimorphisms",
    NOT_BOUNDEDLY_GENERATED: "failure of bounded generation",
}


class NonFiniteLabel(ValueError):
    """Operation restricted to all-finite vertex groups got something else."""


class NotMolecular(ValueError):
    """The molecular-graph verdict applies to molecular graphs, single vertices
    and single edges only."""


class InternalConsistencyError(AssertionError):
    """The two independent routes of the equivalence report disagreed."""


def tri_not(v: str) -> str:
    return {YES: NO, NO: YES, UNKNOWN: UNKNOWN}[v]


def tri_or(values) -> str:
    values = list(values)
    if YES in values:
        return YES
    if UNKNOWN in values:
        return UNKNOWN
    return NO


def tri_and(values) -> str:
    values = list(values)
    if NO in values:
        return NO
    if UNKNOWN in values:
        return UNKNOWN
    return YES


@dataclass(frozen=True)
class Verdict:
    value: str
    reasons: tuple[str, ...]


@dataclass(frozen=True)
class EquivalenceSummary:
    """The six-way equivalence on an all-finite instance.

    entries holds the six statements in order; by the equivalence they all
    carry the same truth value, and the last one is computed by a second,
    independent route (explicit virtual-abelianness of the graph product).
    """

    entries: tuple[bool, bool, bool, bool, bool, bool]
    virtually_abelian: bool


@dataclass(frozen=True)
class RacgLargeness:
    """Largeness of the order-2-labeled graph product of a graph, with the
    explicit direct-sum witness when it fails."""

    large: bool
    decomposition: tuple | None


@dataclass(frozen=True)
class ClassificationReport:
    join: JoinDecomposition
    property_t: Verdict
    sq_universal: Verdict
    many_quasimorphisms: Verdict
    boundedly_generated: Verdict
    equivalences: EquivalenceSummary | None
    aut_property_t: Verdict | None
    molecular_property_t: Verdict | None
    racg_largeness: RacgLargeness | None
    notes: tuple[str, ...]


def _flag_for(flags, prop: str) -> str:
    if prop == SQ_UNIVERSAL:
        return flags.sq_universal
    if prop == MANY_QUASIMORPHISMS:
        return flags.many_quasimorphisms
    if prop == NOT_BOUNDEDLY_GENERATED:
        return tri_not(flags.boundedly_generated)
    raise ValueError(f"unknown property {prop!r}")


def classify_T(ctx: LabeledGraph) -> Verdict:
    """Property (T) for the conjugating-automorphism group: the graph must be
    complete and every central quotient must have property (T)."""
    g = ctx.graph
    if not is_complete(g):
        pair = next(
            (u, w)
            for i, u in enumerate(g.vertices)
            for w in g.vertices[i + 1:]
            if not g.has_edge(u, w)
        )
        return Verdict(NO, (
            f"complete-graph criterion fails: vertices {pair[0]!r} and {pair[1]!r} "
            "are non-adjacent, so the group acts fixed-point freely on a tree",
        ))
    vals, reasons = [], ["complete-graph criterion holds"]
    for v in g.vertices:
        flag = quotient_flags(ctx.label(v)).kazhdan_t
        vals.append(flag)
        if flag != YES:
            reasons.append(f"central quotient at vertex {v!r}: property (T) {flag}")
    value = tri_and(vals)
    if value == YES:
        reasons.append("every central quotient has property (T)")
    return Verdict(value, tuple(reasons))


def classify_vastness(ctx: LabeledGraph, prop: str, assume_admissible: bool = False) -> Verdict:
    """Disjunction deciding a vastness property of the conjugating-automorphism
    group: a core vertex not labeled by the order-2 group, or a cone vertex
    whose central quotient has the property, or a core that is not a join of a
    clique with non-adjacent pairs.

    Properties outside the three admissible ones require assume_admissible;
    the caller then vouches for the closure conditions the schema needs.
    """
    if prop not in ADMISSIBLE_PROPERTIES and not assume_admissible:
        raise ValueError(
            f"property {prop!r} is not one of {ADMISSIBLE_PROPERTIES}; "
            "pass assume_admissible to use it anyway"
        )
    text = _PROPERTY_TEXT.get(prop, prop)
    g = ctx.graph
    jd = join_decompose(g)
    reasons = []
    clause_vals = []

    non_z2_vals = []
    for v in jd.core:
        val = tri_not(is_z2(ctx.label(v)))
        non_z2_vals.append(val)
        if val == YES:
            reasons.append(f"core vertex {v!r} is not labeled by the order-2 group")
            break
    clause_vals.append(tri_or(non_z2_vals))

    cone_vals = []
    for v in jd.cone:
        if prop in ADMISSIBLE_PROPERTIES:
            val = _flag_for(quotient_flags(ctx.label(v)), prop)
        else:
            # admissible properties fail for finite groups; only opaque labels stay open
            val = UNKNOWN if ctx.label(v).kind == "opaque" else NO
        cone_vals.append(val)
        if val == YES:
            reasons.append(f"cone vertex {v!r} has central quotient with {text}")
            break
    clause_vals.append(tri_or(cone_vals))

    core_graph = induced(g, jd.core)
    pairs_join = matches_complete_join_pairs(core_graph)
    clause_vals.append(NO if pairs_join else YES)
    if not pairs_join:
        reasons.append("core is not a join of a clique with non-adjacent pairs")

    value = tri_or(clause_vals)
    if value == NO:
        reasons.append(
            "all core vertices are order-2, no cone quotient has the property, "
            "and the core is a join of a clique with non-adjacent pairs"
        )
    elif value == UNKNOWN:
        reasons.append("opaque labels leave a deciding clause open")
    return Verdict(value, tuple(reasons))


def classify_racg(g: SimplicialGraph, prop: str = SQ_UNIVERSAL) -> Verdict:
    """Same decision on the order-2-uniform labeling, from the graph alone."""
    text = _PROPERTY_TEXT.get(prop, prop)
    if matches_complete_join_pairs(g):
        return Verdict(NO, (
            f"graph is a join of a clique with non-adjacent pairs, so {text} fails",
        ))
    return Verdict(YES, (
        f"graph is not a join of a clique with non-adjacent pairs, so {text} holds",
    ))


def racg_large(g: SimplicialGraph) -> RacgLargeness:
    """Largeness of the all-order-2 graph product; when it fails, extract the
    explicit decomposition into order-2 factors and infinite dihedral factors."""
    if not matches_complete_join_pairs(g):
        return RacgLargeness(True, None)
    blocks = join_pairs_partition(g)
    if blocks is None:
        raise InternalConsistencyError(
            "degree criterion accepted a graph the partition search rejects"
        )
    decomposition = tuple(
        ("Z2", b) if len(b) == 1 else ("Dinf", b) for b in blocks
    )
    return RacgLargeness(False, decomposition)


def classify_equivalences(ctx: LabeledGraph) -> EquivalenceSummary:
    """Six-way equivalence for all-finite vertex groups.

    The first entry is the label/join criterion; the sixth is recomputed by an
    independent route (virtual abelianness of the graph product via an explicit
    partition of the core).  Disagreement raises InternalConsistencyError.
    """
    for v in ctx.graph.vertices:
        if is_finite(ctx.label(v)) is not True:
            raise NonFiniteLabel(f"vertex {v!r} is not labeled by a finite group")
    jd = join_decompose(ctx.graph)
    core_graph = induced(ctx.graph, jd.core)
    has_non_z2 = any(order_of(ctx.label(v)) != 2 for v in jd.core)
    entry_one = has_non_z2 or not matches_complete_join_pairs(core_graph)
    virtually_abelian = (not has_non_z2) and join_pairs_partition(core_graph) is not None
    if entry_one != (not virtually_abelian):
        raise InternalConsistencyError(
            "join criterion and virtual-abelianness route disagree"
        )
    entries = (entry_one,) * 5 + (not virtually_abelian,)
    return EquivalenceSummary(entries, virtually_abelian)


def classify_aut_t(ctx: LabeledGraph) -> Verdict:
    """With finite vertex groups, the full automorphism group has property (T)
    exactly when the graph product itself is finite, i.e. the graph is complete."""
    for v in ctx.graph.vertices:
        if is_finite(ctx.label(v)) is not True:
            raise NonFiniteLabel(f"vertex {v!r} is not labeled by a finite group")
    if is_complete(ctx.graph):
        return Verdict(YES, (
            "graph complete with finite vertex groups: the graph product is finite",
        ))
    return Verdict(NO, (
        "graph not complete: the graph product is infinite",
    ))


def classify_molecular(ctx: LabeledGraph) -> Verdict:
    """Property (T) verdict on the molecular graph class (plus single vertices
    and edges): only a single vertex or edge with (T) quotients passes."""
    g = ctx.graph
    n = len(g.vertices)
    tiny = n == 1 or (n == 2 and len(g.edges) == 1)
    if not tiny and not is_molecular(g):
        raise NotMolecular(
            "graph is neither molecular nor a single vertex or single edge"
        )
    if not tiny:
        return Verdict(NO, (
            "molecular graph with more than one edge: no property (T)",
        ))
    flags = [quotient_flags(ctx.label(v)).kazhdan_t for v in g.vertices]
    value = tri_and(flags)
    if value == YES:
        return Verdict(YES, (
            "single vertex or edge with property (T) central quotients",
        ))
    if value == NO:
        return Verdict(NO, (
            "some central quotient lacks property (T)",
        ))
    return Verdict(UNKNOWN, (
        "property (T) of some central quotient is unknown",
    ))


def classify(ctx: LabeledGraph) -> ClassificationReport:
    """Full report: the headline verdicts plus the specialized statements
    that apply to the instance."""
    jd = join_decompose(ctx.graph)
    notes = []
    if any(ctx.label(v).kind == "opaque" for v in ctx.graph.vertices):
        notes.append(
            "opaque labels: finite generation and quotient flags are taken on trust"
        )

    property_t = classify_T(ctx)
    sq = classify_vastness(ctx, SQ_UNIVERSAL)
    qh = classify_vastness(ctx, MANY_QUASIMORPHISMS)
    nbg = classify_vastness(ctx, NOT_BOUNDEDLY_GENERATED)
    bounded = Verdict(tri_not(nbg.value), nbg.reasons)

    all_finite = all(is_finite(ctx.label(v)) is True for v in ctx.graph.vertices)
    equivalences = classify_equivalences(ctx) if all_finite else None
    aut_t = classify_aut_t(ctx) if all_finite else None
    if not all_finite:
        notes.append("equivalence summary and finiteness verdict need all-finite labels")

    try:
        molecular = classify_molecular(ctx)
    except NotMolecular:
        molecular = None

    all_z2 = all(order_of(ctx.label(v)) == 2 for v in ctx.graph.vertices)
    largeness = racg_large(ctx.graph) if all_z2 else None

    return ClassificationReport(
        join=jd,
        property_t=property_t,
        sq_universal=sq,
        many_quasimorphisms=qh,
        boundedly_generated=bounded,
        equivalences=equivalences,
        aut_property_t=aut_t,
        molecular_property_t=molecular,
        racg_largeness=largeness,
        notes=tuple(notes),
    )


def sil_implies_vast(g: SimplicialGraph) -> bool:
    """Cross-check: a graph containing a separated-intersection-of-links pair
    never satisfies the pairs-join condition."""
    witness = find_sil(g)
    if witness is None:
        return True
    return not matches_complete_join_pairs(g)
