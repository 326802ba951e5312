"""Coupling graphs and the twelve degree series derived from them.

Five directed graphs are built per corpus: inheritance (superclass ->
subclass), interface implementation (interface -> implementing class),
aggregation (class -> field type), parameter (class -> parameter type)
and return type (class -> return type). Edges are sets: a class with
three fields of the same type contributes one aggregation edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import UnknownRelationship
from .ingest import PRIMITIVES, Corpus

COUPLING_TYPES = (
    "inheritance",
    "interface_impl",
    "aggregation",
    "parameter",
    "return_type",
)

RELATIONSHIPS = (
    "Number of Methods",
    "Number of Fields",
    "Number of Constructors",
    "Subclasses",
    "Implemented Interfaces",
    "Interface Implementations",
    "References to class as a member",
    "Members of class type",
    "References to class as a parameter",
    "Parameter-type class references",
    "References to class as return type",
    "Methods returning classes",
)


@dataclass(frozen=True)
class CouplingGraphs:
    inheritance: frozenset[tuple[str, str]]
    interface_impl: frozenset[tuple[str, str]]
    aggregation: frozenset[tuple[str, str]]
    parameter: frozenset[tuple[str, str]]
    return_type: frozenset[tuple[str, str]]
    node_set: frozenset[str]
    external_nodes: frozenset[str] = frozenset()
    diagnostics: tuple[str, ...] = field(default=(), compare=False)

    def edges(self, coupling_type: str) -> frozenset[tuple[str, str]]:
        if coupling_type not in COUPLING_TYPES:
            raise UnknownRelationship(coupling_type)
        return getattr(self, coupling_type)

    def edge_counts(self) -> dict[str, int]:
        return {ct: len(self.edges(ct)) for ct in COUPLING_TYPES}


@dataclass(frozen=True)
class DegreeSeries:
    relationship: str
    counts: tuple[tuple[str, int], ...]  # one entry per corpus class

    def values(self) -> list[int]:
        return [c for _, c in self.counts]

    def as_dict(self) -> dict[str, int]:
        return dict(self.counts)


def build_graphs(corpus: Corpus, include_external: bool = False) -> CouplingGraphs:
    """Build the five coupling graphs from a corpus.

    Targets that do not resolve to a corpus class are dropped by default.
    With include_external=True they become leaf nodes recorded in
    external_nodes; they never appear in per-class degree series.
    """
    nodes = frozenset(corpus.classes)
    edges: dict[str, set[tuple[str, str]]] = {ct: set() for ct in COUPLING_TYPES}
    external: set[str] = set()
    diagnostics: list[str] = []

    def target_of(referrer: str, raw: str) -> str | None:
        if raw in PRIMITIVES:
            return None
        resolved = corpus.resolve(referrer, raw)
        if resolved is not None:
            return resolved
        if include_external:
            external.add(raw)
            return raw
        return None

    for name, summary in corpus.classes.items():
        if summary.superclass is not None:
            target = target_of(name, summary.superclass)
            if target is not None and target != name:
                edges["inheritance"].add((target, name))
        for iface in summary.interfaces:
            target = target_of(name, iface)
            if target is not None:
                edges["interface_impl"].add((target, name))
        for _, ftype in summary.fields:
            target = target_of(name, ftype)
            if target is not None:
                edges["aggregation"].add((name, target))
        param_types = [t for p in summary.constructors for t in p]
        param_types += [t for _, _, p in summary.methods for t in p]
        for ptype in param_types:
            target = target_of(name, ptype)
            if target is not None:
                edges["parameter"].add((name, target))
        for _, rtype, _ in summary.methods:
            target = target_of(name, rtype)
            if target is not None:
                edges["return_type"].add((name, target))

    indegree: dict[str, int] = {}
    for parent, child in edges["inheritance"]:
        indegree[child] = indegree.get(child, 0) + 1
    for child, n in indegree.items():
        if n > 1:
            diagnostics.append(f"multiple superclasses resolved for {child}")
    if _has_cycle(edges["inheritance"]):
        diagnostics.append("inheritance graph contains a cycle")

    return CouplingGraphs(
        inheritance=frozenset(edges["inheritance"]),
        interface_impl=frozenset(edges["interface_impl"]),
        aggregation=frozenset(edges["aggregation"]),
        parameter=frozenset(edges["parameter"]),
        return_type=frozenset(edges["return_type"]),
        node_set=nodes,
        external_nodes=frozenset(external),
        diagnostics=tuple(diagnostics),
    )


def _has_cycle(edge_set) -> bool:
    children: dict[str, list[str]] = {}
    for src, dst in edge_set:
        children.setdefault(src, []).append(dst)
    WHITE, GREY, BLACK = 0, 1, 2
    color: dict[str, int] = {}
    for start in children:
        if color.get(start, WHITE) != WHITE:
            continue
        stack = [(start, iter(children.get(start, ())))]
        color[start] = GREY
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                state = color.get(nxt, WHITE)
                if state == GREY:
                    return True
                if state == WHITE:
                    color[nxt] = GREY
                    stack.append((nxt, iter(children.get(nxt, ()))))
                    advanced = True
                    break
            if not advanced:
                color[node] = BLACK
                stack.pop()
    return False


def _degree_counts(graphs: CouplingGraphs, edge_set, index: int) -> dict[str, int]:
    counts = {name: 0 for name in graphs.node_set}
    for edge in edge_set:
        endpoint = edge[index]
        if endpoint in counts:
            counts[endpoint] += 1
    return counts


# relationship -> (coupling type, 0 for outdegree endpoint / 1 for indegree)
_GRAPH_RELATIONSHIPS = {
    "Subclasses": ("inheritance", 0),
    "Implemented Interfaces": ("interface_impl", 1),
    "Interface Implementations": ("interface_impl", 0),
    "References to class as a member": ("aggregation", 0),
    "Members of class type": ("aggregation", 1),
    "References to class as a parameter": ("parameter", 1),
    "Parameter-type class references": ("parameter", 0),
    "References to class as return type": ("return_type", 1),
    "Methods returning classes": ("return_type", 0),
}


def degree_series(graphs: CouplingGraphs, relationship: str,
                  corpus: Corpus | None = None) -> DegreeSeries:
    """One of the twelve per-class count series.

    The three member-count relationships need the corpus; the nine
    graph-degree relationships are read straight off the edge sets.
    """
    if relationship in ("Number of Methods", "Number of Fields",
                        "Number of Constructors"):
        if corpus is None:
            raise UnknownRelationship(
                f"{relationship} requires the corpus (member counts)")
        methods, fields, constructors = member_counts(corpus)
        return {"Number of Methods": methods,
                "Number of Fields": fields,
                "Number of Constructors": constructors}[relationship]
    if relationship not in _GRAPH_RELATIONSHIPS:
        raise UnknownRelationship(relationship)
    coupling_type, index = _GRAPH_RELATIONSHIPS[relationship]
    # index 0 counts a node's occurrences as edge source (outdegree),
    # index 1 as edge target (indegree)
    counts = _degree_counts(graphs, graphs.edges(coupling_type), index)
    ordered = tuple(sorted(counts.items()))
    return DegreeSeries(relationship, ordered)


def all_degree_series(graphs: CouplingGraphs, corpus: Corpus) -> dict[str, DegreeSeries]:
    """All twelve series in the canonical report order."""
    return {rel: degree_series(graphs, rel, corpus) for rel in RELATIONSHIPS}


def member_counts(corpus: Corpus):
    """Per-class counts of declared methods, fields and constructors."""
    names = sorted(corpus.classes)
    methods = tuple((n, len(corpus.classes[n].methods)) for n in names)
    fields = tuple((n, len(corpus.classes[n].fields)) for n in names)
    constructors = tuple((n, len(corpus.classes[n].constructors)) for n in names)
    return (
        DegreeSeries("Number of Methods", methods),
        DegreeSeries("Number of Fields", fields),
        DegreeSeries("Number of Constructors", constructors),
    )


def export_edge_list(graphs: CouplingGraphs) -> str:
    """Edge-list text: one 'coupling_type<TAB>source<TAB>target' line per
    edge, sorted lexicographically."""
    lines = []
    for coupling_type in COUPLING_TYPES:
        for src, dst in graphs.edges(coupling_type):
            lines.append(f"{coupling_type}\t{src}\t{dst}")
    return "\n".join(sorted(lines)) + ("\n" if lines else "")
