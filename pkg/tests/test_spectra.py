import math
import random

import numpy as np
import pytest
from hypothesis import given, settings

from conftest import hypergraphs

from hyperlap import catalog, errors
from hyperlap.generate import random_hypergraph
from hyperlap.model import bipartition, h_prime, hypergraph
from hyperlap.operators import incidence_matrix, laplacian_hyperedge, laplacian_vertex
from hyperlap.spectra import (
    Spectrum,
    incidence_kernel,
    rayleigh_hyperedge,
    rayleigh_vertex,
    spectrum,
    vertex_eigenpairs,
    zero_multiplicities,
)
from hyperlap import spectra

ROOT = 1 / math.sqrt(2)


def test_zero_multiplicities_examples():
    assert zero_multiplicities(catalog.branching_reunion()) == (2, 1)
    assert zero_multiplicities(catalog.single_hyperedge(5, 3, 3)) == (4, 0)
    assert zero_multiplicities(hypergraph(["a", "b", "c"], [])) == (3, 0)


def test_spectrum_single_hyperedge():
    G = catalog.catalysed_reaction()
    assert spectrum(G, "hyperedge").eigenvalues == pytest.approx((2.0,), abs=1e-12)
    vs = spectrum(G, "vertex")
    assert vs.eigenvalues == pytest.approx((2.0, 0.0, 0.0), abs=1e-12)
    assert vs.zero_multiplicity == 2


def test_spectrum_two_reactions():
    vs = spectrum(catalog.two_reactions(), "vertex")
    assert vs.eigenvalues == pytest.approx((2 + ROOT, 2 - ROOT, 0, 0), abs=1e-12)
    assert vs.eigenvalues[2:] == (0.0, 0.0)


def test_spectrum_single_edge():
    vs = spectrum(hypergraph(["v1", "v2"], [("e", ["v1"], ["v2"])]), "vertex")
    assert vs.eigenvalues == pytest.approx((2.0, 0.0), abs=1e-12)


def test_spectrum_empty_sizes():
    G = hypergraph([], [])
    assert spectrum(G, "vertex") == Spectrum("vertex", (), 0)
    assert spectrum(G, "hyperedge") == Spectrum("hyperedge", (), 0)
    G = hypergraph(["a"], [])
    assert spectrum(G, "hyperedge").eigenvalues == ()
    assert spectrum(G, "vertex").eigenvalues == (0.0,)


def test_spectrum_bad_operator():
    with pytest.raises(ValueError):
        spectrum(catalog.two_reactions(), "edges")


def test_multiplicity_mismatch_is_reported(monkeypatch):
    monkeypatch.setattr(spectra, "zero_multiplicities", lambda G: (0, 0))
    with pytest.raises(errors.MultiplicityMismatch):
        spectrum(catalog.two_reactions(), "vertex")


def test_rayleigh_hyperedge_at_optimum():
    t = math.pi / 8
    r = rayleigh_hyperedge(catalog.two_reactions(), np.array([math.cos(t), math.sin(t)]))
    assert r == pytest.approx(2 + ROOT, abs=1e-12)


def test_rayleigh_constant_on_balanced():
    G = random_hypergraph(6, 5, 2, "balanced")
    assert rayleigh_vertex(G, [1] * 6) == 0


def test_rayleigh_bipartite_block_vector():
    G = catalog.bipartite_pair()
    V1, _ = bipartition(G).partition
    total = sum(h.size for h in G.hyperedges)
    f = np.array([(1 if v in V1 else -1) / math.sqrt(total) for v in G.vertices])
    assert rayleigh_vertex(G, f) == pytest.approx(4.0, abs=1e-12)
    assert h_prime(G) == 4


def test_rayleigh_exact_and_zero_function():
    G = catalog.two_reactions()
    assert rayleigh_vertex(G, [1, 0, 0, 0]) == 1  # delta f = (1, 1); (f, f)_V = 2
    with pytest.raises(errors.ZeroFunction):
        rayleigh_vertex(G, [0, 0, 0, 0])
    with pytest.raises(errors.ZeroFunction):
        rayleigh_hyperedge(G, [0, 0])


@settings(max_examples=80, deadline=None)
@given(hypergraphs())
def test_spectral_invariants(G):
    vs, hs = spectrum(G, "vertex"), spectrum(G, "hyperedge")
    m_V, m_H = zero_multiplicities(G)
    assert (vs.zero_multiplicity, hs.zero_multiplicity) == (m_V, m_H)
    assert m_V - m_H == G.n_vertices - G.n_hyperedges
    for s in (vs, hs):
        assert list(s.eigenvalues) == sorted(s.eigenvalues, reverse=True)
        assert min(s.eigenvalues, default=0) >= -1e-9
        assert sum(1 for x in s.eigenvalues if abs(x) <= 1e-9) == s.zero_multiplicity
    np.testing.assert_allclose(vs.nonzero, hs.nonzero, atol=1e-8)
    # similar, non-symmetric form has the same spectrum
    if G.n_vertices:
        direct = sorted(np.linalg.eigvals(laplacian_vertex(G).to_float()).real, reverse=True)
        np.testing.assert_allclose(direct, vs.eigenvalues, atol=1e-9)
    # mu_1 == 0 iff I == 0
    assert (vs.largest == 0) == (not incidence_matrix(G).entries.any())


@settings(max_examples=60, deadline=None)
@given(hypergraphs())
def test_eigenfunction_transfer(G):
    values, F = vertex_eigenpairs(G)
    LH = laplacian_hyperedge(G).to_float()
    I = incidence_matrix(G).entries.astype(float)
    for mu, f in zip(values, F.T):
        if mu > 1e-9:
            df = I.T @ f
            assert np.linalg.norm(LH @ df - mu * df) <= 1e-8


@settings(max_examples=60, deadline=None)
@given(hypergraphs())
def test_rayleigh_bounds(G):
    if not G.n_hyperedges:
        return
    rng = np.random.default_rng(G.n_vertices * 31 + G.n_hyperedges)
    vs, hs = spectrum(G, "vertex"), spectrum(G, "hyperedge")
    for _ in range(5):
        r = rayleigh_vertex(G, rng.normal(size=G.n_vertices))
        assert vs.eigenvalues[-1] - 1e-9 <= r <= vs.largest + 1e-9
        r = rayleigh_hyperedge(G, rng.normal(size=G.n_hyperedges))
        assert hs.eigenvalues[-1] - 1e-9 <= r <= hs.largest + 1e-9


@settings(max_examples=80, deadline=None)
@given(hypergraphs())
def test_zero_eigenfunctions_balance_each_hyperedge(G):
    idx = G.vertex_index
    for f in incidence_kernel(G, transpose=True).basis:
        for h in G.hyperedges:
            assert sum(f[idx[v]] for v in h.inputs) == sum(f[idx[v]] for v in h.outputs)
        # and L^V f == 0 exactly
        assert not any(laplacian_vertex(G).entries @ np.array(f, dtype=object))


def test_graph_mu1_bound_and_bipartite_equality():
    rng = random.Random(4)
    for trial in range(40):
        G = random_hypergraph(rng.randint(2, 8), rng.randint(1, 9), trial, "graph")
        assert spectrum(G, "vertex").largest <= 2 + 1e-9
    even_cycle = hypergraph(list("abcd"), [("1", "a", "b"), ("2", "b", "c"), ("3", "c", "d"), ("4", "d", "a")])
    odd_cycle = hypergraph(list("abc"), [("1", "a", "b"), ("2", "b", "c"), ("3", "c", "a")])
    assert spectrum(even_cycle, "vertex").largest == pytest.approx(2.0, abs=1e-9)
    assert spectrum(odd_cycle, "vertex").largest == pytest.approx(1.5, abs=1e-9)


def test_bipartite_lower_bound():
    for trial in range(30):
        G = random_hypergraph(2 + trial % 9, 1 + trial % 6, trial, "bipartite")
        assert spectrum(G, "vertex").largest >= float(h_prime(G)) - 1e-9


def test_balanced_has_zero():
    for trial in range(30):
        G = random_hypergraph(1 + trial % 10, trial % 7, trial, "balanced")
        assert spectrum(G, "vertex").zero_multiplicity >= 1
