from itertools import combinations, product

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import hypergraphs
from oracles import brute_force_closed_subsets, has_undirected_cycle

from hyperlap import catalog, errors
from hyperlap.linalg import exact_rank
from hyperlap.model import hypergraph
from hyperlap.operators import incidence_matrix
from hyperlap.spectra import incidence_kernel, zero_multiplicities
from hyperlap.structure import (
    ClosedSystem,
    closed_system_cap,
    enumerate_closed_systems,
    independence_rank,
    is_closed_system,
    structural_report,
    system_matrix,
)


def test_closed_chain_single_system():
    G = catalog.closed_chain()
    (s,) = enumerate_closed_systems(G)
    assert s == ClosedSystem(("h1", "h2", "h3"), frozenset(G.vertices))
    assert is_closed_system(G, ["h1", "h2", "h3"])
    assert not is_closed_system(G, ["h1", "h2"])


def test_source_sink_single_system():
    G = catalog.source_sink()
    assert [s.hyperedge_ids for s in enumerate_closed_systems(G)] == [("h1", "h2")]


def test_branching_has_no_system():
    G = catalog.branching_reunion()
    assert enumerate_closed_systems(G) == []
    ids = [h.id for h in G.hyperedges]
    for r in range(1, 4):
        for sub in combinations(ids, r):
            assert not is_closed_system(G, sub)


def test_oriented_triangle():
    G = hypergraph(list("abc"), [("e1", "a", "b"), ("e2", "b", "c"), ("e3", "c", "a")])
    assert [s.hyperedge_ids for s in enumerate_closed_systems(G)] == [("e1", "e2", "e3")]


def test_is_closed_system_errors():
    G = catalog.closed_chain()
    with pytest.raises(errors.EmptySubset):
        is_closed_system(G, [])
    with pytest.raises(errors.UnknownHyperedge):
        is_closed_system(G, ["h9"])


@settings(max_examples=150, deadline=None)
@given(hypergraphs(max_hyperedges=7))
def test_enumerator_matches_brute_force(G):
    found = enumerate_closed_systems(G)
    idx = G.hyperedge_index
    assert [tuple(idx[h] for h in s.hyperedge_ids) for s in found] == brute_force_closed_subsets(G)
    I = incidence_matrix(G).entries
    for s in found:
        assert is_closed_system(G, s.hyperedge_ids)
        gamma = np.zeros(G.n_hyperedges, dtype=np.int64)
        gamma[[idx[h] for h in s.hyperedge_ids]] = 1
        assert not (I @ gamma).any()
    rep = structural_report(G, found)
    assert rep.independence_rank <= rep.m_H
    assert rep.bound_satisfied


def test_disjoint_systems_are_independent():
    G = hypergraph(
        list("abcd"),
        [("e1", "a", "b"), ("e2", "b", "a"), ("e3", "c", "d"), ("e4", "d", "c")],
    )
    systems = enumerate_closed_systems(G)
    assert [s.hyperedge_ids for s in systems] == [("e1", "e2"), ("e1", "e2", "e3", "e4"), ("e3", "e4")]
    disjoint = [systems[0], systems[2]]
    assert independence_rank(disjoint, [h.id for h in G.hyperedges]) == 2


def test_duplicated_system_rank_one():
    s = ClosedSystem(("e1", "e2"), frozenset("ab"))
    assert independence_rank([s, s], ["e1", "e2"]) == 1
    assert system_matrix([s], ["e1", "e2", "e3"]).tolist() == [[1, 1, 0]]
    assert independence_rank([], ["e1"]) == 0


def test_theta_graph_rank_two():
    # two oriented cycles sharing the edge a->b
    G = hypergraph(
        list("abcd"),
        [("e1", "a", "b"), ("e2", "b", "c"), ("e3", "c", "a"), ("e4", "b", "d"), ("e5", "d", "a")],
    )
    rep = structural_report(G)
    assert rep.closed_system_count == 2
    assert rep.independence_rank == 2 == rep.m_H == rep.cycle_space_dimension


def test_structural_report_examples():
    r = structural_report(catalog.source_sink())
    assert (r.independence_rank, r.m_H, r.bound_satisfied) == (1, 1, True)
    r = structural_report(catalog.branching_reunion())
    assert (r.closed_system_count, r.independence_rank, r.m_H) == (0, 0, 1)
    r = structural_report(hypergraph(["a"], []))
    assert (r.independence_rank, r.m_H) == (0, 0)
    assert r.cycle_space_dimension == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_single_hyperedge_closed_iff_all_catalysts(n):
    for k in range(1, n + 1):
        for m in range(1, n + 1):
            if k + m < n:
                continue
            G = catalog.single_hyperedge(n, k, m)
            closed = bool(enumerate_closed_systems(G))
            assert closed == (k == m == n)


def test_cap_refuses(monkeypatch):
    G = catalog.one_versus_rest(5)
    with pytest.raises(errors.TooManyHyperedges):
        enumerate_closed_systems(G, max_edges=4)
    monkeypatch.setenv("HYPERLAP_CLOSED_SYSTEM_CAP", "3")
    assert closed_system_cap() == 3
    with pytest.raises(errors.TooManyHyperedges):
        enumerate_closed_systems(G)
    monkeypatch.delenv("HYPERLAP_CLOSED_SYSTEM_CAP")
    assert closed_system_cap() == 20
    assert enumerate_closed_systems(G) == []


def test_cap_env_must_be_integer(monkeypatch):
    monkeypatch.setenv("HYPERLAP_CLOSED_SYSTEM_CAP", "lots")
    with pytest.raises(ValueError):
        closed_system_cap()


def _graphs_up_to(n_vertices, max_edges):
    V = [f"v{i}" for i in range(1, n_vertices + 1)]
    arcs = [(a, b) for a in V for b in V if a < b]
    for r in range(0, min(max_edges, len(arcs)) + 1):
        for chosen in combinations(arcs, r):
            for orient in product((0, 1), repeat=r):
                edges = [(f"e{j}", [a] if o == 0 else [b], [b] if o == 0 else [a])
                         for j, ((a, b), o) in enumerate(zip(chosen, orient), 1)]
                yield hypergraph(V, edges)


def test_graph_dependence_is_undirected_cycle():
    # columns of I over a set of edges are dependent iff the edges hold an
    # (unoriented) cycle iff some +-1 re-orientation of a subset is closed
    checked = 0
    for n, max_edges in ((3, 3), (4, 6), (5, 4)):
        for G in _graphs_up_to(n, max_edges):
            I = incidence_matrix(G).entries
            pairs = [(next(iter(h.inputs)), next(iter(h.outputs))) for h in G.hyperedges]
            dependent = exact_rank(I) < G.n_hyperedges if G.n_hyperedges else False
            assert dependent == has_undirected_cycle(pairs)
            # kernel vectors of I are +-1 combinations over a cycle: some signing is balanced
            if dependent:
                (kv, *_) = incidence_kernel(G).basis
                support = [j for j, x in enumerate(kv) if x]
                signs = [1 if kv[j] > 0 else -1 for j in support]
                assert not (I[:, support] @ np.array(signs)).any()
            for s in enumerate_closed_systems(G):
                cols = [G.hyperedge_index[h] for h in s.hyperedge_ids]
                assert exact_rank(I[:, cols]) < len(cols)
            checked += 1
    # 3^3 + 3^6 + sum_{r<=4} C(10, r) 2^r
    assert checked == 27 + 729 + 4521


def test_graph_m_H_is_cycle_space_dimension():
    for G in _graphs_up_to(4, 5):
        r = structural_report(G)
        assert r.m_H == r.cycle_space_dimension
        assert zero_multiplicities(G)[1] == r.m_H
