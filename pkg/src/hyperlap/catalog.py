"""Small named hypergraphs with known spectral and structural facts, plus a
few parametric families used by the checks and the test-suite."""

from __future__ import annotations

from .model import ChemicalHypergraph, hypergraph


def catalysed_reaction() -> ChemicalHypergraph:
    """One hyperedge: inputs v1, v2 and catalyst v3."""
    return hypergraph(["v1", "v2", "v3"], [("h", ["v1", "v2", "v3"], ["v3"])])


def connected_pair() -> ChemicalHypergraph:
    """Two hyperedges sharing only v3."""
    return hypergraph(
        ["v1", "v2", "v3", "v4", "v5"],
        [("h1", ["v1", "v2"], ["v3"]), ("h2", ["v3"], ["v4", "v5"])],
    )


def closed_chain() -> ChemicalHypergraph:
    """Three hyperedges forming a single closed system: v1 and v4 act as
    catalysts at the ends, v2 and v3 are passed along."""
    return hypergraph(
        ["v1", "v2", "v3", "v4"],
        [
            ("h1", ["v1", "v2"], ["v1"]),
            ("h2", ["v3"], ["v2"]),
            ("h3", ["v4"], ["v3", "v4"]),
        ],
    )


def source_sink() -> ChemicalHypergraph:
    """v2 is created with the help of v1 and destroyed with the help of v3."""
    return hypergraph(
        ["v1", "v2", "v3"],
        [("h1", ["v1"], ["v1", "v2"]), ("h2", ["v2", "v3"], ["v3"])],
    )


def branching_reunion() -> ChemicalHypergraph:
    """No closed system, yet L^H has a kernel spanned by (1, 2, 1)."""
    return hypergraph(
        ["v1", "v2", "v3", "v4"],
        [
            ("h1", ["v1"], ["v2"]),
            ("h2", ["v3"], ["v1", "v3"]),
            ("h3", ["v1", "v2", "v4"], ["v4"]),
        ],
    )


def bipartite_pair() -> ChemicalHypergraph:
    """Bipartite with blocks {v1, v2, v3} and {v4, v5, v6}; both hyperedges have four vertices."""
    return hypergraph(
        ["v1", "v2", "v3", "v4", "v5", "v6"],
        [("h1", ["v1", "v2"], ["v4", "v5"]), ("h2", ["v5", "v6"], ["v2", "v3"])],
    )


def two_reactions() -> ChemicalHypergraph:
    """Bipartite, degrees (2, 1, 1, 1); L^H = [[5/2, 1/2], [1/2, 3/2]]."""
    return hypergraph(
        ["v1", "v2", "v3", "v4"],
        [("h1", ["v1", "v2"], ["v3"]), ("h2", ["v1"], ["v4"])],
    )


def single_hyperedge(n: int, k: int, m: int) -> ChemicalHypergraph:
    """One hyperedge on ``n`` vertices with ``k`` inputs and ``m`` outputs.

    Inputs are the first ``k`` vertices and outputs the last ``m``, so there
    are ``k + m - n`` catalysts. Requires ``1 <= k, m <= n <= k + m``.
    """
    if not (1 <= k <= n and 1 <= m <= n and n <= k + m):
        raise ValueError(f"invalid single hyperedge parameters n={n}, k={k}, m={m}")
    V = [f"v{i}" for i in range(1, n + 1)]
    return hypergraph(V, [("h", V[:k], V[n - m :])])


def one_versus_rest(n: int) -> ChemicalHypergraph:
    """``n`` hyperedges; hyperedge i has input v_i and every other vertex as output."""
    V = [f"v{i}" for i in range(1, n + 1)]
    return hypergraph(V, [(f"h{i}", [v], [w for w in V if w != v]) for i, v in enumerate(V, 1)])


def complete_bipartite(a: int, b: int) -> ChemicalHypergraph:
    """K_{a,b} with every edge oriented from the first block to the second."""
    left = [f"a{i}" for i in range(1, a + 1)]
    right = [f"b{j}" for j in range(1, b + 1)]
    edges = [(f"e{x}{y}", [x], [y]) for x in left for y in right]
    return hypergraph(left + right, edges)


INSTANCES = {
    "catalysed-reaction": catalysed_reaction,
    "connected-pair": connected_pair,
    "closed-chain": closed_chain,
    "source-sink": source_sink,
    "branching-reunion": branching_reunion,
    "bipartite-pair": bipartite_pair,
    "two-reactions": two_reactions,
}
