"""Seeded random hypergraphs from a few structural families."""

from __future__ import annotations

import random

from .errors import InfeasibleFamily
from .model import ChemicalHypergraph, hypergraph

FAMILIES = ("generic", "bipartite", "balanced", "all-catalyst", "graph")

_MAX_SIDE = 4


def _subset(rng, pool, upper=_MAX_SIDE):
    return rng.sample(pool, rng.randint(1, min(len(pool), upper)))


def random_hypergraph(
    n_vertices: int, n_hyperedges: int, seed: int, family: str = "generic"
) -> ChemicalHypergraph:
    """Draw a hypergraph with vertices ``v1..vN`` and hyperedges ``h1..hM``.

    Families:
        generic: independent random input and output sets (catalysts allowed).
        bipartite: random split V1|V2; each hyperedge goes from a subset of one
            block to a subset of the other.
        balanced: ``|inputs| == |outputs|`` for every hyperedge.
        all-catalyst: inputs equal outputs.
        graph: one input and one different output.

    The same arguments always give the same hypergraph.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if n_vertices < 1:
        raise InfeasibleFamily("need at least one vertex")
    if n_hyperedges < 0:
        raise InfeasibleFamily("number of hyperedges must be nonnegative")
    if family in ("bipartite", "graph") and n_vertices < 2:
        raise InfeasibleFamily(f"family {family!r} needs at least two vertices")

    rng = random.Random(f"{family}:{n_vertices}:{n_hyperedges}:{seed}")
    V = [f"v{i}" for i in range(1, n_vertices + 1)]
    edges = []
    if family == "bipartite":
        shuffled = V[:]
        rng.shuffle(shuffled)
        cut = rng.randint(1, n_vertices - 1)
        blocks = (shuffled[:cut], shuffled[cut:])
    for j in range(1, n_hyperedges + 1):
        if family == "generic":
            ins, outs = _subset(rng, V), _subset(rng, V)
        elif family == "bipartite":
            a, b = _subset(rng, blocks[0]), _subset(rng, blocks[1])
            ins, outs = (a, b) if rng.random() < 0.5 else (b, a)
        elif family == "balanced":
            k = rng.randint(1, min(n_vertices, _MAX_SIDE))
            ins, outs = rng.sample(V, k), rng.sample(V, k)
        elif family == "all-catalyst":
            ins = _subset(rng, V)
            outs = list(ins)
        else:
            tail, head = rng.sample(V, 2)
            ins, outs = [tail], [head]
        edges.append((f"h{j}", ins, outs))
    return hypergraph(V, edges)
