"""Node-removal reachability experiments on the union coupling graph.

The five coupling graphs are merged and reachability is measured from a
root set after removing nodes either uniformly at random or targeted by
total degree. Traversal walks each coupling edge from the referenced
class back to its referencers, so starting from the foundation classes
(those that couple to nothing) it visits every class still transitively
connected to them. Hub classes are the connective tissue of that walk:
scale-free graphs shrug off random removal but degrade sharply when the
hubs are taken out.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .graphs import COUPLING_TYPES, CouplingGraphs
from .synth import XorShift64Star


@dataclass(frozen=True)
class RemovalExperiment:
    mode: str  # "random" or "targeted_by_degree"
    fraction: float
    trials: int = 1
    rng_seed: int = 0
    roots: frozenset[str] | None = None  # None: indegree-0 nodes
    results: tuple[float, ...] = field(default=())

    def validate(self):
        if self.mode not in ("random", "targeted_by_degree"):
            raise ValueError(f"unknown removal mode {self.mode!r}")
        if not 0.0 <= self.fraction <= 1.0:
            raise ValueError("fraction must lie in [0, 1]")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")


def union_adjacency(graphs: CouplingGraphs) -> dict[str, list[str]]:
    """Traversal adjacency: referenced class -> each class referencing it."""
    adjacency: dict[str, list[str]] = {name: [] for name in graphs.node_set}
    seen = set()
    for coupling_type in COUPLING_TYPES:
        for src, dst in graphs.edges(coupling_type):
            if (src, dst) not in seen and src in adjacency and dst in adjacency:
                seen.add((src, dst))
                adjacency[dst].append(src)
    return adjacency


def default_roots(graphs: CouplingGraphs) -> frozenset[str]:
    """Nodes with traversal indegree 0: classes that couple to nothing."""
    coupled = set()
    for coupling_type in COUPLING_TYPES:
        for src, dst in graphs.edges(coupling_type):
            if src in graphs.node_set and dst in graphs.node_set:
                coupled.add(src)
    return frozenset(graphs.node_set - coupled)


def total_degrees(graphs: CouplingGraphs) -> dict[str, int]:
    degrees = {name: 0 for name in graphs.node_set}
    for coupling_type in COUPLING_TYPES:
        for src, dst in graphs.edges(coupling_type):
            if src in degrees:
                degrees[src] += 1
            if dst in degrees:
                degrees[dst] += 1
    return degrees


def reachable_fraction(graphs: CouplingGraphs, roots, removed) -> float:
    """Fraction of all nodes reachable from surviving roots.

    Removed nodes neither start traversals nor relay them.
    """
    if not graphs.node_set:
        return 0.0
    removed = set(removed)
    adjacency = union_adjacency(graphs)
    stack = [r for r in roots if r not in removed and r in adjacency]
    visited = set(stack)
    while stack:
        node = stack.pop()
        for nxt in adjacency[node]:
            if nxt not in visited and nxt not in removed:
                visited.add(nxt)
                stack.append(nxt)
    return len(visited) / len(graphs.node_set)


def _sample_removed(nodes: list[str], k: int, seed: int) -> set[str]:
    # partial Fisher-Yates over a sorted copy for platform-stable draws
    rng = XorShift64Star(seed)
    pool = list(nodes)
    for i in range(k):
        j = i + rng.randrange(len(pool) - i)
        pool[i], pool[j] = pool[j], pool[i]
    return set(pool[:k])


def run_experiment(graphs: CouplingGraphs,
                   experiment: RemovalExperiment) -> RemovalExperiment:
    """Fill in per-trial reachable fractions.

    Random mode removes floor(fraction * |V|) uniformly chosen nodes per
    trial, with per-trial streams derived from (rng_seed, trial index).
    Targeted mode removes the top-degree nodes (ties broken by name) in a
    single deterministic trial.
    """
    experiment.validate()
    nodes = sorted(graphs.node_set)
    k = int(experiment.fraction * len(nodes))
    roots = experiment.roots if experiment.roots is not None else default_roots(graphs)

    if experiment.mode == "targeted_by_degree":
        degrees = total_degrees(graphs)
        ranked = sorted(nodes, key=lambda n: (-degrees[n], n))
        removed = set(ranked[:k])
        results = (reachable_fraction(graphs, roots, removed),)
    else:
        results = []
        for trial in range(experiment.trials):
            trial_seed = (experiment.rng_seed * 0x100000001B3 + trial) & ((1 << 64) - 1)
            removed = _sample_removed(nodes, k, trial_seed)
            results.append(reachable_fraction(graphs, roots, removed))
        results = tuple(results)
    return replace(experiment, roots=frozenset(roots), results=results)


def export_results(experiment: RemovalExperiment) -> str:
    """Rows 'mode<TAB>fraction<TAB>trial<TAB>reachable_fraction'."""
    lines = [
        f"{experiment.mode}\t{experiment.fraction:.4f}\t{trial}\t{value:.6f}"
        for trial, value in enumerate(experiment.results)
    ]
    return "\n".join(lines) + ("\n" if lines else "")
