"""Chemical hypergraphs: vertices plus hyperedges carrying an input and an
output vertex set, which may overlap (catalysts).

Everything here is an immutable value; the stored (inputs, outputs) pair of a
hyperedge is its "+" orientation and is never reversed in place.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import (
    DuplicateId,
    EmptyInputSet,
    EmptyOutputSet,
    NoHyperedges,
    UnknownVertex,
    ValidationError,
)

__all__ = [
    "Hyperedge",
    "ChemicalHypergraph",
    "Component",
    "ConstraintStep",
    "Conflict",
    "BipartitenessResult",
    "validate",
    "hypergraph",
    "degree",
    "degrees",
    "connected_components",
    "subhypergraph",
    "bipartition",
    "replay_conflict",
    "flip_vertex",
    "h_prime",
    "is_graph",
]


def _check_token(token, what):
    if not isinstance(token, str) or not token or any(c.isspace() for c in token):
        raise ValidationError(f"{what} must be a nonempty string without whitespace, got {token!r}")


@dataclass(frozen=True)
class Hyperedge:
    """One reaction. ``inputs`` and ``outputs`` are vertex sets."""

    id: str
    inputs: frozenset
    outputs: frozenset

    @property
    def catalysts(self) -> frozenset:
        return self.inputs & self.outputs

    @property
    def members(self) -> frozenset:
        return self.inputs | self.outputs

    @property
    def size(self) -> int:
        """Number of distinct vertices; a catalyst counts once."""
        return len(self.members)


@dataclass(frozen=True)
class ChemicalHypergraph:
    """Ordered vertices and ordered hyperedges.

    Construct through :func:`validate` or :func:`hypergraph`. ``relaxed`` is
    set only by :func:`flip_vertex` and permits a hyperedge side to be empty;
    it is not part of equality.
    """

    vertices: tuple
    hyperedges: tuple
    relaxed: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self):
        seen = set()
        for v in self.vertices:
            _check_token(v, "vertex id")
            if v in seen:
                raise DuplicateId(f"vertex {v!r} declared twice")
            seen.add(v)
        edge_ids = set()
        for h in self.hyperedges:
            if not isinstance(h.id, str) or not h.id:
                raise ValidationError(f"hyperedge id must be a nonempty string, got {h.id!r}")
            if h.id in edge_ids:
                raise DuplicateId(f"hyperedge {h.id!r} declared twice")
            edge_ids.add(h.id)
            unknown = h.members - seen
            if unknown:
                raise UnknownVertex(
                    f"hyperedge {h.id!r} references undeclared vertices {sorted(unknown)}"
                )
            if not self.relaxed:
                if not h.inputs:
                    raise EmptyInputSet(f"hyperedge {h.id!r} has no inputs")
                if not h.outputs:
                    raise EmptyOutputSet(f"hyperedge {h.id!r} has no outputs")
            elif not h.members:
                raise ValidationError(f"hyperedge {h.id!r} has no vertices")

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_hyperedges(self) -> int:
        return len(self.hyperedges)

    @cached_property
    def vertex_index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def hyperedge_index(self) -> dict:
        return {h.id: j for j, h in enumerate(self.hyperedges)}

    def hyperedge(self, hid: str) -> Hyperedge:
        return self.hyperedges[self.hyperedge_index[hid]]

    def ordered(self, vertex_set: Iterable[str]) -> list:
        """Vertices of ``vertex_set`` in declaration order."""
        idx = self.vertex_index
        return sorted(vertex_set, key=idx.__getitem__)

    @property
    def has_empty_side(self) -> bool:
        return any(not h.inputs or not h.outputs for h in self.hyperedges)

    def _require_vertex(self, v):
        if v not in self.vertex_index:
            raise UnknownVertex(f"unknown vertex {v!r}")


def _side(raw_side, hid, what):
    if isinstance(raw_side, (str, bytes)) or not isinstance(raw_side, Iterable):
        raise ValidationError(f"hyperedge {hid!r}: {what} must be a list of vertex ids")
    items = list(raw_side)
    out = frozenset(items)
    if len(out) != len(items):
        raise DuplicateId(f"hyperedge {hid!r}: repeated vertex in {what}")
    return out


def validate(raw: Mapping, *, allow_empty_side: bool = False) -> ChemicalHypergraph:
    """Build a :class:`ChemicalHypergraph` from a plain description.

    ``raw`` needs a ``vertices`` list and a ``hyperedges`` list whose items
    are mappings with ``id``, ``inputs`` and ``outputs``.
    """
    if not isinstance(raw, Mapping):
        raise ValidationError("hypergraph description must be a mapping")
    try:
        raw_vertices = raw["vertices"]
        raw_edges = raw["hyperedges"]
    except KeyError as exc:
        raise ValidationError(f"missing field {exc.args[0]!r}") from None
    if isinstance(raw_vertices, (str, bytes)) or not isinstance(raw_vertices, Sequence):
        raise ValidationError("'vertices' must be a list")
    if isinstance(raw_edges, (str, bytes)) or not isinstance(raw_edges, Sequence):
        raise ValidationError("'hyperedges' must be a list")

    edges = []
    for item in raw_edges:
        if not isinstance(item, Mapping):
            raise ValidationError("each hyperedge must be a mapping")
        missing = {"id", "inputs", "outputs"} - set(item)
        if missing:
            raise ValidationError(f"hyperedge missing fields {sorted(missing)}")
        hid = item["id"]
        edges.append(
            Hyperedge(hid, _side(item["inputs"], hid, "inputs"), _side(item["outputs"], hid, "outputs"))
        )
    return ChemicalHypergraph(tuple(raw_vertices), tuple(edges), relaxed=allow_empty_side)


def hypergraph(vertices: Iterable[str], edges: Iterable, *, allow_empty_side=False) -> ChemicalHypergraph:
    """Shorthand constructor: ``edges`` is an iterable of ``(id, inputs, outputs)``."""
    return validate(
        {
            "vertices": list(vertices),
            "hyperedges": [{"id": e[0], "inputs": list(e[1]), "outputs": list(e[2])} for e in edges],
        },
        allow_empty_side=allow_empty_side,
    )


def degree(G: ChemicalHypergraph, v: str) -> int:
    """Number of hyperedges containing ``v``; a catalyst counts once."""
    G._require_vertex(v)
    return sum(1 for h in G.hyperedges if v in h.members)


def degrees(G: ChemicalHypergraph) -> list:
    deg = [0] * G.n_vertices
    idx = G.vertex_index
    for h in G.hyperedges:
        for v in h.members:
            deg[idx[v]] += 1
    return deg


def is_graph(G: ChemicalHypergraph) -> bool:
    """True when every hyperedge is an ordinary edge: one input, one other output."""
    return all(
        len(h.inputs) == 1 and len(h.outputs) == 1 and not h.catalysts for h in G.hyperedges
    )


@dataclass(frozen=True)
class Component:
    vertices: tuple
    hyperedges: tuple


class _DisjointSet:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, i):
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i, j):
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[max(ri, rj)] = min(ri, rj)


def connected_components(G: ChemicalHypergraph) -> list:
    """Components ordered by their first vertex in declaration order.

    Vertices inside a component keep declaration order, as do hyperedges.
    """
    idx = G.vertex_index
    ds = _DisjointSet(G.n_vertices)
    for h in G.hyperedges:
        members = [idx[v] for v in h.members]
        for i in members[1:]:
            ds.union(members[0], i)
    groups = {}
    for i, v in enumerate(G.vertices):
        groups.setdefault(ds.find(i), ([], []))[0].append(v)
    for h in G.hyperedges:
        some = next(iter(h.members))
        groups[ds.find(idx[some])][1].append(h.id)
    return [Component(tuple(vs), tuple(hs)) for vs, hs in groups.values()]


def subhypergraph(G: ChemicalHypergraph, vertices, hyperedge_ids) -> ChemicalHypergraph:
    """Restriction of ``G``; declaration order is preserved."""
    keep_v, keep_h = set(vertices), set(hyperedge_ids)
    edges = tuple(h for h in G.hyperedges if h.id in keep_h)
    return ChemicalHypergraph(
        tuple(v for v in G.vertices if v in keep_v), edges, relaxed=G.relaxed
    )


@dataclass(frozen=True)
class ConstraintStep:
    """``source`` and ``target`` share hyperedge ``hyperedge``; ``opposite``
    says whether the block assignment must differ between them."""

    hyperedge: str
    source: str
    target: str
    opposite: bool


@dataclass(frozen=True)
class Conflict:
    vertex: str
    chain: tuple

    @property
    def hyperedge_ids(self) -> tuple:
        return tuple(step.hyperedge for step in self.chain)


@dataclass(frozen=True)
class BipartitenessResult:
    partition: tuple | None = None
    conflict: Conflict | None = None

    @property
    def is_bipartite(self) -> bool:
        return self.partition is not None

    def __bool__(self):
        return self.is_bipartite


def _relation(h: Hyperedge, a: str, b: str):
    """Whether ``a`` and ``b`` must be in opposite blocks because of ``h``;
    ``None`` when ``h`` imposes nothing between them."""
    if a not in h.members or b not in h.members:
        return None
    if a == b:
        return True if a in h.catalysts else None
    a_in, b_in = a in h.inputs, b in h.inputs
    a_out, b_out = a in h.outputs, b in h.outputs
    if (a_in and b_out) or (a_out and b_in):
        return True
    return False


def replay_conflict(G: ChemicalHypergraph, conflict: Conflict) -> bool:
    """Check that a conflict witness is genuine.

    Starting from ``conflict.vertex`` in block +1, each step must be a
    constraint that ``G`` really imposes, the chain must be contiguous, and it
    must return to the witness with block -1.
    """
    if not conflict.chain:
        return False
    current, sign = conflict.vertex, 1
    for step in conflict.chain:
        if step.source != current or step.hyperedge not in G.hyperedge_index:
            return False
        rel = _relation(G.hyperedge(step.hyperedge), step.source, step.target)
        if rel is None or rel != step.opposite:
            return False
        current = step.target
        sign = -sign if step.opposite else sign
    return current == conflict.vertex and sign == -1


def bipartition(G: ChemicalHypergraph) -> BipartitenessResult:
    """Split V into two blocks so every hyperedge runs from one block to the other.

    Uses union-find with parities. On success, the lexicographically least
    vertex of every component goes into the first block. On failure the
    result carries a witness vertex and a chain of constraints that forces
    it into both blocks.
    """
    idx = G.vertex_index
    for h in G.hyperedges:
        if h.catalysts:
            c = G.ordered(h.catalysts)[0]
            return BipartitenessResult(conflict=Conflict(c, (ConstraintStep(h.id, c, c, True),)))

    n = G.n_vertices
    parent = list(range(n))
    parity = [0] * n  # parity relative to parent
    forest = [[] for _ in range(n)]  # (neighbour, opposite, hyperedge id)

    def find(i):
        path = []
        while parent[i] != i:
            path.append(i)
            i = parent[i]
        root, acc = i, 0
        for node in reversed(path):
            acc ^= parity[node]
            parity[node] = acc
            parent[node] = root
        return root

    def unite(a, b, opposite, hid):
        ra, rb = find(a), find(b)
        pa = parity[a] if a != ra else 0
        pb = parity[b] if b != rb else 0
        if ra == rb:
            if (pa ^ pb) != opposite:
                return _witness(a, b, opposite, hid)
            return None
        parent[rb] = ra
        parity[rb] = pa ^ pb ^ opposite
        forest[a].append((b, opposite, hid))
        forest[b].append((a, opposite, hid))
        return None

    def _witness(a, b, opposite, hid):
        # path a -> b through already-merged constraints, then close the cycle
        prev = {a: None}
        queue = deque([a])
        while queue:
            x = queue.popleft()
            if x == b:
                break
            for y, opp, eid in forest[x]:
                if y not in prev:
                    prev[y] = (x, opp, eid)
                    queue.append(y)
        steps = []
        x = b
        while prev[x] is not None:
            y, opp, eid = prev[x]
            steps.append(ConstraintStep(eid, G.vertices[y], G.vertices[x], bool(opp)))
            x = y
        steps.reverse()
        steps.append(ConstraintStep(hid, G.vertices[b], G.vertices[a], bool(opposite)))
        return Conflict(G.vertices[a], tuple(steps))

    for h in G.hyperedges:
        ins = [idx[v] for v in G.ordered(h.inputs)]
        outs = [idx[v] for v in G.ordered(h.outputs)]
        constraints = [(ins[0], x, 0) for x in ins[1:]] + [(outs[0], y, 0) for y in outs[1:]]
        if ins and outs:
            constraints.append((ins[0], outs[0], 1))
        for a, b, opp in constraints:
            conflict = unite(a, b, opp, h.id)
            if conflict is not None:
                return BipartitenessResult(conflict=conflict)

    blocks = ([], [])
    anchor = {}
    for i in sorted(range(n), key=lambda i: G.vertices[i]):
        r = find(i)
        p = parity[i] if i != r else 0
        if r not in anchor:
            anchor[r] = p
        blocks[p ^ anchor[r]].append(G.vertices[i])
    return BipartitenessResult(partition=(frozenset(blocks[0]), frozenset(blocks[1])))


def flip_vertex(G: ChemicalHypergraph, v: str) -> ChemicalHypergraph:
    """Exchange the input and output role of ``v`` in every hyperedge.

    Catalysts are fixed points. The result may contain a hyperedge with an
    empty side (e.g. flipping the head of an ordinary edge); it is returned as
    a relaxed hypergraph and must be revalidated before use as a strict one.
    """
    G._require_vertex(v)
    edges = []
    for h in G.hyperedges:
        ins, outs = h.inputs, h.outputs
        if v in h.members and v not in h.catalysts:
            if v in ins:
                ins, outs = ins - {v}, outs | {v}
            else:
                ins, outs = ins | {v}, outs - {v}
        edges.append(Hyperedge(h.id, ins, outs))
    return ChemicalHypergraph(G.vertices, tuple(edges), relaxed=True)


def h_prime(G: ChemicalHypergraph) -> Fraction:
    """``sum |h|^2 / sum |h|`` with ``|h|`` the number of distinct vertices of h."""
    if not G.hyperedges:
        raise NoHyperedges("h' needs at least one hyperedge")
    sizes = [h.size for h in G.hyperedges]
    return Fraction(sum(s * s for s in sizes), sum(sizes))
