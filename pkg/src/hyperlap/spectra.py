"""Spectra of the vertex and hyperedge Laplacians.

Eigenvalues are reported largest first (mu_1 >= ... >= mu_N), which is the
reverse of the usual ascending numpy convention.

Zero multiplicities never come from floating point: they are kernel
dimensions of the incidence matrix, computed by exact rational elimination
(``m_H = dim ker I``, ``m_V = dim ker I^T``). The eigensolver output is only
checked against them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import MultiplicityMismatch, ZeroFunction
from .linalg import KernelBasis, exact_rank, exact_rank_and_kernel, jacobi_eigh
from .model import ChemicalHypergraph
from .operators import (
    boundary_apply,
    coboundary_apply,
    hyperedge_inner,
    incidence_matrix,
    laplacian_hyperedge,
    laplacian_vertex_symmetrized,
    vertex_inner,
    vertex_weights,
)

__all__ = [
    "ZERO_TOL",
    "Spectrum",
    "incidence_rank",
    "incidence_kernel",
    "zero_multiplicities",
    "spectrum",
    "vertex_eigenpairs",
    "hyperedge_eigenpairs",
    "rayleigh_vertex",
    "rayleigh_hyperedge",
]

ZERO_TOL = 1e-9

VERTEX = "vertex"
HYPEREDGE = "hyperedge"


@dataclass(frozen=True)
class Spectrum:
    operator: str
    eigenvalues: tuple
    zero_multiplicity: int

    def __len__(self):
        return len(self.eigenvalues)

    @property
    def largest(self) -> float:
        return self.eigenvalues[0] if self.eigenvalues else 0.0

    @property
    def nonzero(self) -> tuple:
        return tuple(x for x in self.eigenvalues if x > ZERO_TOL)


def incidence_rank(G: ChemicalHypergraph) -> int:
    return exact_rank(incidence_matrix(G).entries)


def incidence_kernel(G: ChemicalHypergraph, transpose: bool = False) -> KernelBasis:
    """Exact kernel of ``I`` (hyperedge functions with zero net flow at every
    vertex) or of ``I^T`` (vertex functions balanced on every hyperedge)."""
    I = incidence_matrix(G).entries
    if transpose:
        return exact_rank_and_kernel(I.T, "I^T")
    return exact_rank_and_kernel(I, "I")


def zero_multiplicities(G: ChemicalHypergraph):
    """``(m_V, m_H)``: multiplicities of eigenvalue 0 of L^V and L^H."""
    r = incidence_rank(G)
    return G.n_vertices - r, G.n_hyperedges - r


def _solve(G, which):
    if which == VERTEX:
        S = laplacian_vertex_symmetrized(G).to_float()
    elif which == HYPEREDGE:
        S = laplacian_hyperedge(G).to_float()
    else:
        raise ValueError(f"operator must be 'vertex' or 'hyperedge', got {which!r}")
    return jacobi_eigh(S)


def _snap(values, m, tol, which):
    near_zero = np.abs(values) <= tol
    count = int(near_zero.sum())
    if count != m:
        raise MultiplicityMismatch(
            f"{which} spectrum: {count} eigenvalues within {tol:g} of zero, "
            f"exact kernel dimension is {m}"
        )
    values = np.where(near_zero, 0.0, values)
    return values


def spectrum(G: ChemicalHypergraph, which: str = VERTEX, tol: float = ZERO_TOL) -> Spectrum:
    """Eigenvalues of L^V (``which='vertex'``) or L^H (``which='hyperedge'``).

    L^V is diagonalised through its symmetric similar form
    ``W^-1/2 I I^T W^-1/2``. Eigenvalues within ``tol`` of zero are set to 0
    after confirming their count equals the exact multiplicity.

    Raises:
        MultiplicityMismatch: the eigensolver's zero count disagrees with the
            exact kernel dimension.
    """
    m_V, m_H = zero_multiplicities(G)
    values, _ = _solve(G, which)
    m = m_V if which == VERTEX else m_H
    values = _snap(values, m, tol, which)
    values = np.sort(values)[::-1]
    return Spectrum(which, tuple(float(x) for x in values), m)


def vertex_eigenpairs(G: ChemicalHypergraph):
    """Eigenvalues (descending) and eigenfunctions of L^V as columns.

    The eigenfunctions are ``W^-1/2 y`` for unit eigenvectors ``y`` of the
    symmetrized operator, hence orthonormal for the weighted inner product.
    """
    values, Y = _solve(G, VERTEX)
    s = 1.0 / np.sqrt(np.asarray(vertex_weights(G), dtype=float))
    return values, Y * s[:, None]


def hyperedge_eigenpairs(G: ChemicalHypergraph):
    return _solve(G, HYPEREDGE)


def _is_exact(x):
    return np.asarray(x).dtype.kind in "iubO"


def rayleigh_vertex(G: ChemicalHypergraph, f):
    """``sum_h (delta f(h))^2 / sum_v deg(v) f(v)^2``.

    Exact (a Fraction) for integer or Fraction input.
    """
    den = vertex_inner(G, f, f)
    if den == 0:
        raise ZeroFunction("vertex function is identically zero")
    df = boundary_apply(G, f)
    num = sum(x * x for x in df)
    return Fraction(num) / Fraction(den) if _is_exact(f) else float(num) / float(den)


def rayleigh_hyperedge(G: ChemicalHypergraph, gamma):
    """``sum_v deg(v) (delta* gamma(v))^2 / sum_h gamma(h)^2``."""
    den = hyperedge_inner(G, gamma, gamma)
    if den == 0:
        raise ZeroFunction("hyperedge function is identically zero")
    g = coboundary_apply(G, gamma)
    num = vertex_inner(G, g, g)
    return Fraction(num) / Fraction(den) if _is_exact(gamma) else float(num) / float(den)
