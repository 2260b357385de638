"""Closed systems of reactions and their linear independence.

A closed system is a nonempty set of hyperedges in which every vertex
involved occurs as often as an input as it does as an output (a catalyst
occurrence counts on both sides). Oriented cycles of a graph are the
prototype.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import EmptySubset, TooManyHyperedges, UnknownHyperedge
from .linalg import exact_rank
from .model import ChemicalHypergraph, connected_components, is_graph
from .operators import incidence_matrix
from .spectra import zero_multiplicities

__all__ = [
    "DEFAULT_CAP",
    "ClosedSystem",
    "StructuralReport",
    "closed_system_cap",
    "is_closed_system",
    "enumerate_closed_systems",
    "system_matrix",
    "independence_rank",
    "structural_report",
]

DEFAULT_CAP = 20
CAP_ENV = "HYPERLAP_CLOSED_SYSTEM_CAP"


def closed_system_cap() -> int:
    """Enumeration cap: ``$HYPERLAP_CLOSED_SYSTEM_CAP`` if set, else 20."""
    raw = os.environ.get(CAP_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{CAP_ENV} must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class ClosedSystem:
    hyperedge_ids: tuple
    induced_vertices: frozenset


def _induced(G, ids):
    return frozenset().union(*(G.hyperedge(h).members for h in ids))


def is_closed_system(G: ChemicalHypergraph, hyperedge_ids) -> bool:
    """Direct balance count over the given hyperedges."""
    ids = list(hyperedge_ids)
    if not ids:
        raise EmptySubset("a closed system needs at least one hyperedge")
    for h in ids:
        if h not in G.hyperedge_index:
            raise UnknownHyperedge(f"unknown hyperedge {h!r}")
    as_input, as_output = Counter(), Counter()
    for hid in set(ids):
        h = G.hyperedge(hid)
        as_input.update(h.inputs)
        as_output.update(h.outputs)
    return all(as_input[v] == as_output[v] for v in _induced(G, set(ids)))


def _half_sums(cols, offset):
    """Map from column-sum vector to the index subsets (within one half) producing it."""
    table = {}
    k = len(cols)
    for r in range(k + 1):
        for subset in combinations(range(k), r):
            s = cols[list(subset)].sum(axis=0) if subset else np.zeros(cols.shape[1], dtype=np.int64)
            table.setdefault(s.tobytes(), []).append(tuple(i + offset for i in subset))
    return table


def enumerate_closed_systems(G: ChemicalHypergraph, max_edges: int | None = None) -> list:
    """Every closed system of ``G``, ordered lexicographically by the tuple
    of hyperedge positions.

    A subset is closed exactly when the incidence columns it selects sum to
    zero. The search splits the hyperedges in two halves and matches column
    sums (meet in the middle), so it costs about ``2^(M/2)`` per half plus
    the size of the output.

    Raises:
        TooManyHyperedges: when ``M`` exceeds ``max_edges`` (default from
            :func:`closed_system_cap`).
    """
    cap = closed_system_cap() if max_edges is None else max_edges
    M = G.n_hyperedges
    if M > cap:
        raise TooManyHyperedges(f"{M} hyperedges exceed the closed-system cap of {cap}")
    if M == 0:
        return []
    cols = incidence_matrix(G).entries.T.astype(np.int64)
    half = M // 2
    low = _half_sums(cols[:half], 0)
    high = _half_sums(cols[half:], half)
    found = []
    for key, highs in high.items():
        negated = (-np.frombuffer(key, dtype=np.int64)).tobytes()
        for lo in low.get(negated, ()):
            for hi in highs:
                if lo or hi:
                    found.append(lo + hi)
    found.sort()
    ids = [h.id for h in G.hyperedges]
    out = []
    for subset in found:
        hids = tuple(ids[j] for j in subset)
        out.append(ClosedSystem(hids, _induced(G, hids)))
    return out


def system_matrix(systems, hyperedge_ids) -> np.ndarray:
    """K x M 0/1 matrix whose row i marks the hyperedges of system i."""
    col = {h: j for j, h in enumerate(hyperedge_ids)}
    A = np.zeros((len(systems), len(col)), dtype=np.int64)
    for i, s in enumerate(systems):
        for h in s.hyperedge_ids:
            A[i, col[h]] = 1
    return A


def independence_rank(systems, hyperedge_ids) -> int:
    """Maximum number of linearly independent systems (exact rank of the system matrix)."""
    if not systems:
        return 0
    return exact_rank(system_matrix(systems, hyperedge_ids))


@dataclass(frozen=True)
class StructuralReport:
    closed_system_count: int
    independence_rank: int
    m_H: int
    bound_satisfied: bool
    cycle_space_dimension: int | None = None


def structural_report(G: ChemicalHypergraph, systems=None) -> StructuralReport:
    """Compare the number of independent closed systems with ``m_H``.

    ``systems`` defaults to a full enumeration. For graphs the report also
    carries ``|E| - |V| + components``, the dimension of the cycle space.
    """
    if systems is None:
        systems = enumerate_closed_systems(G)
    ids = [h.id for h in G.hyperedges]
    rank = independence_rank(systems, ids)
    _, m_H = zero_multiplicities(G)
    cycles = None
    if is_graph(G):
        cycles = G.n_hyperedges - G.n_vertices + len(connected_components(G))
    return StructuralReport(len(systems), rank, m_H, rank <= m_H, cycles)
