"""Signed incidence matrix, boundary/coboundary maps and the two Laplacians.

All matrices are built with exact rationals (``fractions.Fraction`` in numpy
object arrays). Floating point only appears in :meth:`OperatorMatrix.to_float`.

Vertex functions use the degree-weighted inner product; an isolated vertex
gets weight 1 so the product stays positive definite. Its incidence row is
zero, so it contributes nothing to either Laplacian.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DimensionMismatch
from .model import ChemicalHypergraph, degrees

__all__ = [
    "IncidenceMatrix",
    "OperatorMatrix",
    "incidence_matrix",
    "vertex_weights",
    "boundary_apply",
    "coboundary_apply",
    "vertex_inner",
    "hyperedge_inner",
    "adjointness_check",
    "boundary_matrix",
    "coboundary_matrix",
    "laplacian_vertex",
    "laplacian_hyperedge",
    "laplacian_vertex_symmetrized",
]


def _frozen(a):
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class IncidenceMatrix:
    """N x M matrix: +1 input-only, -1 output-only, 0 for catalysts and non-members."""

    entries: np.ndarray
    vertices: tuple
    hyperedges: tuple

    @property
    def shape(self):
        return self.entries.shape

    def __array__(self, dtype=None, copy=None):
        return self.entries if dtype is None else self.entries.astype(dtype)

    def __eq__(self, other):
        if not isinstance(other, IncidenceMatrix):
            return NotImplemented
        return (
            self.vertices == other.vertices
            and self.hyperedges == other.hyperedges
            and np.array_equal(self.entries, other.entries)
        )


def incidence_matrix(G: ChemicalHypergraph) -> IncidenceMatrix:
    """Rows follow vertex declaration order, columns hyperedge declaration order."""
    idx = G.vertex_index
    I = np.zeros((G.n_vertices, G.n_hyperedges), dtype=np.int64)
    for j, h in enumerate(G.hyperedges):
        for v in h.inputs - h.outputs:
            I[idx[v], j] = 1
        for v in h.outputs - h.inputs:
            I[idx[v], j] = -1
    return IncidenceMatrix(_frozen(I), G.vertices, tuple(h.id for h in G.hyperedges))


def vertex_weights(G: ChemicalHypergraph) -> list:
    """Vertex inner-product weights: ``deg v``, or 1 for an isolated vertex."""
    return [max(d, 1) for d in degrees(G)]


def _vector(x, n, what):
    arr = np.asarray(x)
    if arr.ndim != 1 or arr.shape[0] != n:
        raise DimensionMismatch(f"{what} must have length {n}, got shape {arr.shape}")
    if arr.dtype.kind in "iub":
        return np.array([Fraction(int(v)) for v in arr], dtype=object)
    if arr.dtype.kind == "O":
        return arr
    return arr.astype(float)


def _typed(I, like):
    return I.astype(object) if like.dtype == object else I.astype(float)


def boundary_apply(G: ChemicalHypergraph, f):
    """``(delta f)(h)``: sum of f over the inputs of h minus sum over its outputs.

    Catalysts cancel, so this is ``I^T f``. Integer and Fraction inputs are
    evaluated exactly.
    """
    f = _vector(f, G.n_vertices, "vertex function")
    I = incidence_matrix(G).entries
    return _typed(I, f).T @ f


def coboundary_apply(G: ChemicalHypergraph, gamma):
    """Adjoint of :func:`boundary_apply`: ``(I gamma)(v) / deg v``.

    The value at an isolated vertex is 0.
    """
    gamma = _vector(gamma, G.n_hyperedges, "hyperedge function")
    I = incidence_matrix(G).entries
    num = _typed(I, gamma) @ gamma
    w = vertex_weights(G)
    if gamma.dtype == object:
        return np.array([Fraction(x) / wi for x, wi in zip(num, w)], dtype=object)
    return num / np.asarray(w, dtype=float)


def vertex_inner(G: ChemicalHypergraph, f, g):
    """``sum_v deg(v) f(v) g(v)`` with weight 1 at isolated vertices."""
    f = _vector(f, G.n_vertices, "f")
    g = _vector(g, G.n_vertices, "g")
    return sum(w * a * b for w, a, b in zip(vertex_weights(G), f, g))


def hyperedge_inner(G: ChemicalHypergraph, omega, gamma):
    omega = _vector(omega, G.n_hyperedges, "omega")
    gamma = _vector(gamma, G.n_hyperedges, "gamma")
    return sum(a * b for a, b in zip(omega, gamma))


def adjointness_check(G: ChemicalHypergraph, f, gamma):
    """Return ``((delta f, gamma)_H, (f, delta* gamma)_V)``; the caller compares them."""
    lhs = hyperedge_inner(G, boundary_apply(G, f), gamma)
    rhs = vertex_inner(G, f, coboundary_apply(G, gamma))
    return lhs, rhs


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """An exact rational operator matrix.

    ``kind`` is one of ``boundary``, ``coboundary``, ``laplacian_V``,
    ``laplacian_H`` or ``laplacian_V_symmetrized``. For the symmetrized form
    ``entries`` holds the integer numerator ``I I^T`` and ``scale`` the vertex
    weights; :meth:`to_float` applies ``W^-1/2 (.) W^-1/2``.
    """

    kind: str
    entries: np.ndarray
    rows: tuple
    cols: tuple
    scale: tuple | None = None

    @property
    def shape(self):
        return self.entries.shape

    def to_float(self) -> np.ndarray:
        A = self.entries.astype(float)
        if self.scale is not None:
            s = 1.0 / np.sqrt(np.asarray(self.scale, dtype=float))
            A = A * np.outer(s, s)
        return A

    def is_symmetric(self) -> bool:
        return bool(np.all(self.entries == self.entries.T))


def _fractions(A):
    out = np.empty(A.shape, dtype=object)
    for ij, x in np.ndenumerate(A):
        out[ij] = Fraction(x)
    return out


def boundary_matrix(G: ChemicalHypergraph) -> OperatorMatrix:
    """M x N matrix of ``delta``; equals ``I^T``."""
    inc = incidence_matrix(G)
    return OperatorMatrix("boundary", _frozen(_fractions(inc.entries.T)), inc.hyperedges, inc.vertices)


def coboundary_matrix(G: ChemicalHypergraph) -> OperatorMatrix:
    """N x M matrix of ``delta*``; equals ``W^-1 I``."""
    inc = incidence_matrix(G)
    A = _fractions(inc.entries)
    for i, w in enumerate(vertex_weights(G)):
        A[i, :] = A[i, :] / w
    return OperatorMatrix("coboundary", _frozen(A), inc.vertices, inc.hyperedges)


def laplacian_vertex(G: ChemicalHypergraph) -> OperatorMatrix:
    """``L^V = W^-1 I I^T`` (N x N). Self-adjoint for the weighted product, not symmetric."""
    inc = incidence_matrix(G)
    A = _fractions(inc.entries @ inc.entries.T)
    for i, w in enumerate(vertex_weights(G)):
        A[i, :] = A[i, :] / w
    return OperatorMatrix("laplacian_V", _frozen(A), inc.vertices, inc.vertices)


def laplacian_hyperedge(G: ChemicalHypergraph) -> OperatorMatrix:
    """``L^H = I^T W^-1 I`` (M x M), symmetric."""
    inc = incidence_matrix(G)
    w = vertex_weights(G)
    # integer product over a common denominator, one Fraction per entry
    D = math.lcm(*w) if w else 1
    scaled = inc.entries * np.array([D // x for x in w], dtype=np.int64)[:, None]
    numer = inc.entries.T @ scaled
    A = np.empty(numer.shape, dtype=object)
    for ij, x in np.ndenumerate(numer):
        A[ij] = Fraction(int(x), D)
    return OperatorMatrix("laplacian_H", _frozen(A), inc.hyperedges, inc.hyperedges)


def laplacian_vertex_symmetrized(G: ChemicalHypergraph) -> OperatorMatrix:
    """``W^-1/2 I I^T W^-1/2``: similar to ``L^V`` and symmetric.

    Stored as the exact numerator plus weights; the square roots are taken
    in :meth:`OperatorMatrix.to_float`.
    """
    inc = incidence_matrix(G)
    A = _fractions(inc.entries @ inc.entries.T)
    return OperatorMatrix(
        "laplacian_V_symmetrized", _frozen(A), inc.vertices, inc.vertices, tuple(vertex_weights(G))
    )
