"""Normalized Laplace operators on chemical hypergraphs.

Hyperedges carry an input and an output vertex set. The vertex Laplacian
``L^V`` and hyperedge Laplacian ``L^H`` share their nonzero spectrum; their
zero multiplicities are kernel dimensions of the signed incidence matrix.
"""

from .errors import *  # noqa: F401,F403
from .model import (
    BipartitenessResult,
    ChemicalHypergraph,
    Hyperedge,
    bipartition,
    connected_components,
    degree,
    degrees,
    flip_vertex,
    h_prime,
    hypergraph,
    validate,
)
from .operators import (
    adjointness_check,
    boundary_apply,
    coboundary_apply,
    incidence_matrix,
    laplacian_hyperedge,
    laplacian_vertex,
    laplacian_vertex_symmetrized,
)
from .linalg import KernelBasis, eigenvalues_symmetric, exact_rank_and_kernel
from .spectra import (
    Spectrum,
    rayleigh_hyperedge,
    rayleigh_vertex,
    spectrum,
    zero_multiplicities,
)
from .structure import (
    ClosedSystem,
    enumerate_closed_systems,
    independence_rank,
    is_closed_system,
    structural_report,
)
from .io import parse, serialize
from .generate import random_hypergraph

__version__ = "0.1.0"
