"""Connectivity systems: a finite ground set with a symmetric submodular function.

The ground set is always {0, ..., n-1} and subsets are n-bit masks (bit i set
iff element i is in the subset).  Five constructions are supported:

- ``explicit``            a full table of 2**n function values
- ``graph_cut``           ground set = graph vertices, f(A) = crossing edges
- ``graph_boundary``      ground set = graph edges, f(A) = shared vertices
- ``hyperedge_boundary``  ground set = hypergraph vertices, f(A) = split hyperedges
- ``min_cardinality``     f(A) = min(|A|, n - |A|)

The three boundary kinds are symmetric submodular by construction (each is a
sum of indicator cuts); explicit tables are verified before they are accepted.
Systems are immutable after construction apart from the ``verified`` flag and
an internal value-table cache, so they are safe to share between readers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .exceptions import FunctionAxiomError, GroundSetLimitError

# 2**n table entries; beyond this nothing in the toolkit is tractable anyway
EXPLICIT_TABLE_LIMIT = 24
# exhaustive verification walks all 4**n subset pairs
EXHAUSTIVE_VERIFY_LIMIT = 12
# cheap seeded spot check applied when structured kinds are built
BUILD_SPOT_CHECK_PAIRS = 128

SYSTEM_KINDS = (
    "explicit",
    "graph_cut",
    "graph_boundary",
    "hyperedge_boundary",
    "min_cardinality",
)

CHECK_SYMMETRY = "symmetry"
CHECK_SUBMODULARITY = "submodularity"
CHECK_EMPTY_SET_MINIMUM = "empty_set_minimum"
CHECK_POSIMODULARITY = "posimodularity"
CHECK_NAMES = (
    CHECK_SYMMETRY,
    CHECK_SUBMODULARITY,
    CHECK_EMPTY_SET_MINIMUM,
    CHECK_POSIMODULARITY,
)


class ConnectivitySystem:
    """A pair of ground set {0..n-1} and symmetric submodular function."""

    def __init__(
        self,
        n: int,
        kind: str,
        *,
        name: str | None = None,
        values: tuple[int, ...] | None = None,
        vertices: tuple[str, ...] | None = None,
        edges: tuple[tuple[str, str], ...] | None = None,
        hyperedges: tuple[tuple[int, ...], ...] | None = None,
        cross_masks: tuple[int, ...] | None = None,
    ):
        self.n = n
        self.kind = kind
        self.name = name
        self.values = values
        self.vertices = vertices
        self.edges = edges
        self.hyperedges = hyperedges
        self.verified = False
        self._cross_masks = cross_masks
        self._table: np.ndarray | None = None
        if kind == "explicit":
            self._table = np.asarray(values, dtype=np.int64)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def evaluate(self, mask: int) -> int:
        """Return f(A) for the subset encoded by ``mask``."""
        if mask < 0 or mask > self.full_mask:
            raise ValueError(
                f"mask {mask:#x} has bits outside the ground set of size {self.n}"
            )
        if self._table is not None:
            return int(self._table[mask])
        if self.kind == "min_cardinality":
            c = mask.bit_count()
            return min(c, self.n - c)
        # boundary kinds: count crossing units split by the mask
        total = 0
        for unit in self._cross_masks:
            hit = mask & unit
            if hit and hit != unit:
                total += 1
        return total

    def table(self) -> np.ndarray:
        """The full value table, built lazily and cached.  Needs n <= 24."""
        if self._table is None:
            if self.n > EXPLICIT_TABLE_LIMIT:
                raise GroundSetLimitError("value table", self.n, EXPLICIT_TABLE_LIMIT)
            size = 1 << self.n
            masks = np.arange(size, dtype=np.int64)
            if self.kind == "min_cardinality":
                counts = np.zeros(size, dtype=np.int64)
                for bit in range(self.n):
                    counts += (masks >> bit) & 1
                t = np.minimum(counts, self.n - counts)
            else:
                t = np.zeros(size, dtype=np.int64)
                for unit in self._cross_masks:
                    hit = masks & unit
                    t += ((hit != 0) & (hit != unit)).astype(np.int64)
            self._table = t
        return self._table

    def max_order(self) -> int:
        return int(self.table().max())

    def labels(self) -> tuple[str, ...]:
        """Human-readable element names, in ground-set order."""
        if self.kind == "graph_cut":
            return self.vertices
        if self.kind == "graph_boundary":
            return tuple(f"{u}-{v}" for u, v in self.edges)
        return tuple(f"e{i}" for i in range(self.n))

    def describe(self) -> str:
        if self.name:
            return self.name
        return f"{self.kind}(n={self.n})"

    def to_explicit(self) -> ConnectivitySystem:
        """Export to an explicit table with pointwise-equal evaluate."""
        values = tuple(int(v) for v in self.table())
        return explicit_system(values, name=self.name)

    def __repr__(self):
        return f"ConnectivitySystem({self.describe()!r}, kind={self.kind!r})"


def evaluate(system: ConnectivitySystem, mask: int) -> int:
    return system.evaluate(mask)


@dataclass(frozen=True)
class VerificationCheck:
    name: str
    passed: bool
    witness: tuple[int, ...]  # the offending masks, empty on pass


@dataclass(frozen=True)
class VerificationReport:
    mode: str
    pairs_checked: int
    checks: tuple[VerificationCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> VerificationCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def _verify_exhaustive(system: ConnectivitySystem) -> VerificationReport:
    t = system.table()
    size = t.size
    full = size - 1
    masks = np.arange(size, dtype=np.int64)
    comp = masks ^ full
    witnesses: dict[str, tuple[int, ...] | None] = {n: None for n in CHECK_NAMES}

    sym_bad = np.nonzero(t != t[::-1])[0]  # f(complement) read via reversed index
    if sym_bad.size:
        witnesses[CHECK_SYMMETRY] = (int(sym_bad[0]),)
    floor_bad = np.nonzero(t < t[0])[0]
    if floor_bad.size:
        witnesses[CHECK_EMPTY_SET_MINIMUM] = (int(floor_bad[0]),)

    for a in range(size):
        if witnesses[CHECK_SUBMODULARITY] is None:
            bad = np.nonzero(t[a] + t < t[a & masks] + t[a | masks])[0]
            if bad.size:
                witnesses[CHECK_SUBMODULARITY] = (a, int(bad[0]))
        if witnesses[CHECK_POSIMODULARITY] is None:
            bad = np.nonzero(t[a] + t < t[a & comp] + t[masks & (a ^ full)])[0]
            if bad.size:
                witnesses[CHECK_POSIMODULARITY] = (a, int(bad[0]))
        if (
            witnesses[CHECK_SUBMODULARITY] is not None
            and witnesses[CHECK_POSIMODULARITY] is not None
        ):
            break

    checks = tuple(
        VerificationCheck(name, witnesses[name] is None, witnesses[name] or ())
        for name in CHECK_NAMES
    )
    report = VerificationReport("exhaustive", size * size, checks)
    if report.passed:
        system.verified = True
    return report


def _verify_sampled(system: ConnectivitySystem, samples: int, seed: int) -> VerificationReport:
    rng = random.Random(seed)
    size = 1 << system.n
    f = system.evaluate
    f_empty = f(0)
    full = size - 1
    witnesses: dict[str, tuple[int, ...] | None] = {n: None for n in CHECK_NAMES}
    for _ in range(samples):
        a = rng.randrange(size)
        b = rng.randrange(size)
        fa, fb = f(a), f(b)
        if witnesses[CHECK_SYMMETRY] is None and fa != f(a ^ full):
            witnesses[CHECK_SYMMETRY] = (a,)
        if witnesses[CHECK_EMPTY_SET_MINIMUM] is None and fa < f_empty:
            witnesses[CHECK_EMPTY_SET_MINIMUM] = (a,)
        if witnesses[CHECK_SUBMODULARITY] is None and fa + fb < f(a & b) + f(a | b):
            witnesses[CHECK_SUBMODULARITY] = (a, b)
        if witnesses[CHECK_POSIMODULARITY] is None and fa + fb < f(a & ~b) + f(b & ~a):
            witnesses[CHECK_POSIMODULARITY] = (a, b)
    checks = tuple(
        VerificationCheck(name, witnesses[name] is None, witnesses[name] or ())
        for name in CHECK_NAMES
    )
    return VerificationReport("sampled", samples, checks)


def verify_axioms(
    system: ConnectivitySystem,
    mode: str = "exhaustive",
    *,
    samples: int = 20000,
    seed: int = 0,
) -> VerificationReport:
    """Check symmetry, submodularity and the two implied inequalities.

    ``exhaustive`` walks every subset pair and is limited to n <= 12; it sets
    the system's ``verified`` flag on a full pass.  ``sampled`` draws
    ``samples`` seeded random pairs and works at any supported size.
    Failures are report content with witness masks, never exceptions.
    """
    if mode == "exhaustive":
        if system.n > EXHAUSTIVE_VERIFY_LIMIT:
            raise GroundSetLimitError(
                "exhaustive verification", system.n, EXHAUSTIVE_VERIFY_LIMIT
            )
        return _verify_exhaustive(system)
    if mode == "sampled":
        return _verify_sampled(system, samples, seed)
    raise ValueError(f"unknown verification mode {mode!r}")


# ---------------------------------------------------------------------------
# builders


def _check_n(n, kind: str) -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError(f"{kind}: ground set size must be an integer")
    if n < 1 or n > EXPLICIT_TABLE_LIMIT:
        raise ValueError(
            f"{kind}: ground set size {n} outside supported range "
            f"1..{EXPLICIT_TABLE_LIMIT}"
        )
    return n


def _spot_check(system: ConnectivitySystem) -> None:
    # structured kinds are submodular by construction; this catches builder bugs
    report = _verify_sampled(system, BUILD_SPOT_CHECK_PAIRS, seed=0)
    if not report.passed:
        failed = next(c for c in report.checks if not c.passed)
        raise FunctionAxiomError(
            f"{system.kind} construction violated {failed.name} "
            f"(witness masks {failed.witness})",
            failed.witness,
        )


def explicit_system(values, *, name: str | None = None) -> ConnectivitySystem:
    """Build from a full table; the table must survive verification."""
    values = tuple(values)
    size = len(values)
    n = size.bit_length() - 1
    if size < 2 or size != 1 << n:
        raise ValueError(f"explicit table length {size} is not a power of two >= 2")
    _check_n(n, "explicit")
    for i, v in enumerate(values):
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ValueError(
                f"explicit table entry {i} is {v!r}, expected a non-negative integer"
            )
    system = ConnectivitySystem(n, "explicit", name=name, values=values)
    if n <= EXHAUSTIVE_VERIFY_LIMIT:
        report = _verify_exhaustive(system)
    else:
        # 4**n pairs are out of reach here; documented fallback
        report = _verify_sampled(system, samples=65536, seed=0)
    if not report.passed:
        failed = next(c for c in report.checks if not c.passed)
        raise FunctionAxiomError(
            f"explicit table rejected: {failed.name} fails at witness masks "
            f"{failed.witness}",
            failed.witness,
        )
    return system


def min_cardinality_system(n: int, *, name: str | None = None) -> ConnectivitySystem:
    _check_n(n, "min_cardinality")
    return ConnectivitySystem(n, "min_cardinality", name=name)


def _check_graph(vertices, edges):
    vertices = tuple(str(v) for v in vertices)
    if not vertices:
        raise ValueError("graph needs at least one vertex")
    if len(set(vertices)) != len(vertices):
        raise ValueError("duplicate vertex names")
    index = {v: i for i, v in enumerate(vertices)}
    cleaned = []
    for e in edges:
        pair = tuple(str(v) for v in e)
        if len(pair) != 2:
            raise ValueError(f"edge {e!r} is not a pair")
        u, v = pair
        if u not in index or v not in index:
            raise ValueError(f"edge {e!r} references an unknown vertex")
        if u == v:
            raise ValueError(f"self-loop {e!r} is not allowed")
        cleaned.append(pair)
    return vertices, tuple(cleaned), index


def graph_cut_system(vertices, edges, *, name: str | None = None) -> ConnectivitySystem:
    """Ground set = vertices; f(A) = number of edges leaving A."""
    vertices, edges, index = _check_graph(vertices, edges)
    n = _check_n(len(vertices), "graph_cut")
    masks = tuple((1 << index[u]) | (1 << index[v]) for u, v in edges)
    system = ConnectivitySystem(
        n, "graph_cut", name=name, vertices=vertices, edges=edges, cross_masks=masks
    )
    _spot_check(system)
    return system


def graph_boundary_system(vertices, edges, *, name: str | None = None) -> ConnectivitySystem:
    """Ground set = edges, in the given order; f(A) counts vertices incident
    to an edge in A and an edge outside A."""
    vertices, edges, _ = _check_graph(vertices, edges)
    n = _check_n(len(edges), "graph_boundary")
    masks = []
    for v in vertices:
        m = 0
        for i, e in enumerate(edges):
            if v in e:
                m |= 1 << i
        masks.append(m)
    system = ConnectivitySystem(
        n,
        "graph_boundary",
        name=name,
        vertices=vertices,
        edges=edges,
        cross_masks=tuple(masks),
    )
    _spot_check(system)
    return system


def hyperedge_system(n: int, hyperedges, *, name: str | None = None) -> ConnectivitySystem:
    """Ground set = {0..n-1}; f(A) counts hyperedges meeting A and its complement."""
    _check_n(n, "hyperedge_boundary")
    cleaned = []
    masks = []
    for h in hyperedges:
        members = tuple(h)
        seen = set()
        m = 0
        for v in members:
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise ValueError(f"hyperedge {h!r} has element {v!r} outside 0..{n - 1}")
            if v in seen:
                raise ValueError(f"hyperedge {h!r} repeats element {v}")
            seen.add(v)
            m |= 1 << v
        cleaned.append(members)
        masks.append(m)
    system = ConnectivitySystem(
        n,
        "hyperedge_boundary",
        name=name,
        hyperedges=tuple(cleaned),
        cross_masks=tuple(masks),
    )
    _spot_check(system)
    return system


def build_system(descriptor: dict, *, name: str | None = None) -> ConnectivitySystem:
    """Instantiate a system from a descriptor shaped like the on-disk payload."""
    if not isinstance(descriptor, dict):
        raise ValueError("system descriptor must be a mapping")
    kind = descriptor.get("kind")
    if kind not in SYSTEM_KINDS:
        raise ValueError(f"unknown system kind {kind!r}")
    fields = {
        "explicit": {"kind", "n", "values"},
        "graph_cut": {"kind", "vertices", "edges"},
        "graph_boundary": {"kind", "vertices", "edges"},
        "hyperedge_boundary": {"kind", "n", "hyperedges"},
        "min_cardinality": {"kind", "n"},
    }[kind]
    extra = set(descriptor) - fields
    if extra:
        raise ValueError(f"{kind} descriptor has unknown fields: {sorted(extra)}")
    missing = fields - set(descriptor)
    if missing:
        raise ValueError(f"{kind} descriptor is missing fields: {sorted(missing)}")
    if kind == "explicit":
        values = descriptor["values"]
        n = descriptor["n"]
        _check_n(n, kind)
        if not isinstance(values, (list, tuple)) or len(values) != 1 << n:
            raise ValueError(
                f"explicit values must be a list of length {1 << n} for n={n}"
            )
        return explicit_system(values, name=name)
    if kind == "graph_cut":
        return graph_cut_system(descriptor["vertices"], descriptor["edges"], name=name)
    if kind == "graph_boundary":
        return graph_boundary_system(
            descriptor["vertices"], descriptor["edges"], name=name
        )
    if kind == "hyperedge_boundary":
        return hyperedge_system(descriptor["n"], descriptor["hyperedges"], name=name)
    return min_cardinality_system(descriptor["n"], name=name)


def system_descriptor(system: ConnectivitySystem) -> dict:
    """The JSON-shaped payload that rebuilds this system via build_system."""
    if system.kind == "explicit":
        return {"kind": "explicit", "n": system.n, "values": list(system.values)}
    if system.kind in ("graph_cut", "graph_boundary"):
        return {
            "kind": system.kind,
            "vertices": list(system.vertices),
            "edges": [list(e) for e in system.edges],
        }
    if system.kind == "hyperedge_boundary":
        return {
            "kind": "hyperedge_boundary",
            "n": system.n,
            "hyperedges": [list(h) for h in system.hyperedges],
        }
    return {"kind": "min_cardinality", "n": system.n}
