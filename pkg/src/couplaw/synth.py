"""Synthetic corpus generation by mixed preferential/uniform attachment.

Classes are added one at a time; each new class draws, per coupling
type, m targets without replacement from existing classes. A target t is
chosen with probability alpha/N + (1-alpha) * (indeg(t)+1) / sum(indeg+1),
with indegrees tracked per coupling type. The "+1" keeps isolated nodes
reachable. Chosen edges are realized as actual class declarations
(fields, method signatures, extends/implements clauses), so the output
corpus runs through the full analysis pipeline unchanged.

Randomness comes from a self-contained xorshift64* generator so streams
reproduce bit-for-bit across platforms and languages.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import InvalidParams
from .ingest import ClassSummary, Corpus

_MASK64 = (1 << 64) - 1


class XorShift64Star:
    """xorshift64* PRNG (Vigna 2016).

    State update: x ^= x >> 12; x ^= x << 25; x ^= x >> 27 (mod 2^64),
    output x * 0x2545F4914F6CDD1D mod 2^64. The seed is mixed through one
    splitmix64 step so seed 0 is usable.
    """

    def __init__(self, seed: int):
        z = (seed + 0x9E3779B97F4A7C15) & _MASK64
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        z ^= z >> 31
        self.state = z or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x = (x ^ (x << 25)) & _MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & _MASK64

    def random(self) -> float:
        """Uniform float in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) / float(1 << 53)

    def randrange(self, n: int) -> int:
        return int(self.random() * n)


EDGE_KINDS = ("aggregation", "inheritance", "interface", "parameter", "return_type")


@dataclass(frozen=True)
class SynthParams:
    n_classes: int
    seed_size: int = 3
    edges_per_class: dict = dc_field(default_factory=dict)  # kind -> m
    alpha: float = 0.0
    rng_seed: int = 0
    interface_fraction: float = 0.0

    def validate(self):
        if self.seed_size < 2:
            raise InvalidParams("seed_size must be >= 2")
        if self.n_classes < self.seed_size:
            raise InvalidParams("n_classes must be >= seed_size")
        if not 0.0 <= self.alpha <= 1.0:
            raise InvalidParams("alpha must lie in [0, 1]")
        if not 0.0 <= self.interface_fraction <= 1.0:
            raise InvalidParams("interface_fraction must lie in [0, 1]")
        for kind, m in self.edges_per_class.items():
            if kind not in EDGE_KINDS:
                raise InvalidParams(f"unknown coupling type {kind!r}")
            if m < 0:
                raise InvalidParams(f"negative edge count for {kind}")
        if self.edges_per_class.get("inheritance", 0) > 1:
            raise InvalidParams("inheritance allows at most one edge per class")


class _AttachmentPool:
    """Targets for one coupling type, sampled by the mixed rule.

    The repeated-node list holds each candidate once per unit of
    (indegree + 1), so a uniform pick from it is the preferential term.
    """

    def __init__(self):
        self.candidates: list[str] = []
        self.repeated: list[str] = []

    def add_node(self, name: str):
        self.candidates.append(name)
        self.repeated.append(name)

    def record_edge(self, target: str):
        self.repeated.append(target)

    def draw(self, rng: XorShift64Star, m: int, alpha: float) -> list[str]:
        chosen: list[str] = []
        seen = set()
        limit = min(m, len(self.candidates))
        while len(chosen) < limit:
            if rng.random() < alpha:
                pick = self.candidates[rng.randrange(len(self.candidates))]
            else:
                pick = self.repeated[rng.randrange(len(self.repeated))]
            if pick not in seen:
                seen.add(pick)
                chosen.append(pick)
        for target in chosen:
            self.record_edge(target)
        return chosen


def generate(params: SynthParams) -> Corpus:
    """Grow a synthetic corpus; deterministic for a fixed rng_seed."""
    params.validate()
    rng = XorShift64Star(params.rng_seed)
    width = len(str(params.n_classes - 1))
    names = [f"S{i:0{width}d}" for i in range(params.n_classes)]

    pools = {kind: _AttachmentPool() for kind in EDGE_KINDS}
    kinds: dict[str, str] = {}
    agg_targets: dict[str, list[str]] = {}
    param_targets: dict[str, list[str]] = {}
    return_targets: dict[str, list[str]] = {}
    superclass: dict[str, str | None] = {}
    implemented: dict[str, list[str]] = {}

    def register(name: str, kind: str):
        kinds[name] = kind
        agg_targets[name] = []
        param_targets[name] = []
        return_targets[name] = []
        superclass[name] = None
        implemented[name] = []
        pools["aggregation"].add_node(name)
        pools["parameter"].add_node(name)
        pools["return_type"].add_node(name)
        if kind == "class":
            pools["inheritance"].add_node(name)
        else:
            pools["interface"].add_node(name)

    # seed core: classes, one directed aggregation edge per unordered pair
    for i in range(params.seed_size):
        register(names[i], "class")
    for j in range(params.seed_size):
        for i in range(j):
            agg_targets[names[j]].append(names[i])
            pools["aggregation"].record_edge(names[i])

    for idx in range(params.seed_size, params.n_classes):
        name = names[idx]
        kind = "interface" if rng.random() < params.interface_fraction else "class"
        drawn: dict[str, list[str]] = {}
        for edge_kind in EDGE_KINDS:
            m = params.edges_per_class.get(edge_kind, 0)
            if m == 0:
                continue
            if edge_kind == "inheritance" and kind == "interface":
                continue
            drawn[edge_kind] = pools[edge_kind].draw(rng, m, params.alpha)
        register(name, kind)
        agg_targets[name] = drawn.get("aggregation", [])
        param_targets[name] = drawn.get("parameter", [])
        return_targets[name] = drawn.get("return_type", [])
        implemented[name] = drawn.get("interface", [])
        inh = drawn.get("inheritance", [])
        superclass[name] = inh[0] if inh else None

    summaries = []
    for name in names:
        fields = tuple(
            (f"f{k}", target) for k, target in enumerate(agg_targets[name])
        )
        methods = []
        if param_targets[name]:
            methods.append(("use", "void", tuple(param_targets[name])))
        for k, target in enumerate(return_targets[name]):
            methods.append((f"make{k}", target, ()))
        summaries.append(
            ClassSummary(
                qualified_name=name,
                kind=kinds[name],
                superclass=superclass[name],
                interfaces=tuple(sorted(implemented[name])),
                fields=fields,
                constructors=(),
                methods=tuple(methods),
            )
        )
    return Corpus.from_summaries(summaries)


def sample_power_law(a: float, n: int, x_max: int, rng_seed: int = 0) -> list[int]:
    """n i.i.d. draws from P(x) proportional to x^-a on {1..x_max}.

    Inverse-CDF sampling over the exactly normalized mass function;
    deterministic for a fixed seed.
    """
    if a <= 1.0:
        raise InvalidParams("exponent must exceed 1")
    if n <= 0 or x_max < 1:
        raise InvalidParams("n and x_max must be positive")
    mass = np.arange(1, x_max + 1, dtype=float) ** (-a)
    cdf = np.cumsum(mass / mass.sum())
    cdf[-1] = 1.0
    rng = XorShift64Star(rng_seed)
    cdf_list = cdf.tolist()
    return [bisect_left(cdf_list, rng.random()) + 1 for _ in range(n)]
