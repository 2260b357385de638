"""Identity checks run on a single hypergraph, and the reference-instance table.

Every check records the two values it compared, so a failure can be read
without rerunning anything.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import catalog
from .errors import TooManyHyperedges
from .model import (
    ChemicalHypergraph,
    Hyperedge,
    bipartition,
    connected_components,
    degrees,
    flip_vertex,
    h_prime,
    is_graph,
    subhypergraph,
)
from .operators import (
    adjointness_check,
    boundary_apply,
    coboundary_apply,
    hyperedge_inner,
    incidence_matrix,
    laplacian_hyperedge,
    laplacian_vertex,
    vertex_inner,
)
from .spectra import (
    ZERO_TOL,
    incidence_kernel,
    rayleigh_hyperedge,
    rayleigh_vertex,
    spectrum,
    vertex_eigenpairs,
    zero_multiplicities,
)
from .linalg import exact_rank
from .structure import enumerate_closed_systems, independence_rank

SPECTRUM_TOL = 1e-9
SHARED_TOL = 1e-8
TRANSFER_TOL = 1e-7


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    lhs: object
    rhs: object
    detail: str = ""

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
            "detail": self.detail,
        }


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (np.floating, np.integer)):
        return x.item()
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    return x


def _max_gap(a, b):
    if len(a) != len(b):
        return math.inf
    return max((abs(x - y) for x, y in zip(a, b)), default=0.0)


def multiplicity_check(G, mults=None) -> CheckResult:
    m_V, m_H = mults or zero_multiplicities(G)
    return CheckResult(
        "m_V - m_H == N - M", m_V - m_H == G.n_vertices - G.n_hyperedges,
        m_V - m_H, G.n_vertices - G.n_hyperedges,
    )


def nonnegativity_checks(vs, hs) -> list:
    out = []
    for s in (vs, hs):
        low = min(s.eigenvalues, default=0.0)
        out.append(CheckResult(f"{s.operator} eigenvalues >= 0", low >= -SPECTRUM_TOL, low, -SPECTRUM_TOL))
    return out


def shared_spectrum_check(vs, hs) -> CheckResult:
    a, b = vs.nonzero, hs.nonzero
    gap = _max_gap(a, b)
    return CheckResult("nonzero spectra of L^V and L^H agree", gap <= SHARED_TOL, list(a), list(b),
                       f"max gap {gap:.3e}")


def _random_fraction(rng):
    return Fraction(rng.randint(-9, 9), rng.randint(1, 5))


def _balanced_directly(G, f) -> bool:
    """Sum over inputs equals sum over outputs on every hyperedge, from the sets themselves."""
    idx = G.vertex_index
    return all(
        sum(f[idx[v]] for v in h.inputs) == sum(f[idx[v]] for v in h.outputs)
        for h in G.hyperedges
    )


def _graph_component_checks(G):
    out = []
    for comp in connected_components(G):
        if not comp.hyperedges:
            continue
        sub = subhypergraph(G, comp.vertices, comp.hyperedges)
        mu1 = spectrum(sub, "vertex").largest
        bip = bipartition(sub).is_bipartite
        ok = mu1 <= 2 + SPECTRUM_TOL and ((mu1 >= 2 - SHARED_TOL) == bip)
        out.append(CheckResult(
            f"graph component {comp.vertices[0]}: mu_1 <= 2, = 2 iff bipartite",
            ok, mu1, bip,
        ))
    return out


def invariant_suite(G: ChemicalHypergraph, seed: int = 0, flips: bool = True) -> list:
    """Run every structural identity on ``G`` and return the check results in order."""
    rng = random.Random(seed)
    N, M = G.n_vertices, G.n_hyperedges
    results = []

    mults = zero_multiplicities(G)
    results.append(multiplicity_check(G, mults))
    vs, hs = spectrum(G, "vertex"), spectrum(G, "hyperedge")
    results.extend(nonnegativity_checks(vs, hs))
    results.append(shared_spectrum_check(vs, hs))

    LH = laplacian_hyperedge(G)
    results.append(CheckResult("L^H symmetric (exact)", LH.is_symmetric(), LH.shape, LH.shape))

    LVf = laplacian_vertex(G).to_float()
    similar = sorted(np.linalg.eigvals(LVf).real, reverse=True) if N else []
    gap = _max_gap(similar, vs.eigenvalues)
    results.append(CheckResult("L^V and its symmetrized form are isospectral", gap <= SPECTRUM_TOL,
                               similar, list(vs.eigenvalues), f"max gap {gap:.3e}"))

    values, F = vertex_eigenpairs(G)
    LHf = LH.to_float()
    I = incidence_matrix(G).entries.astype(float)
    worst = 0.0
    for mu, f in zip(values, F.T):
        if mu > ZERO_TOL:
            df = I.T @ f
            worst = max(worst, float(np.linalg.norm(LHf @ df - mu * df)))
    results.append(CheckResult("delta maps L^V eigenfunctions to L^H eigenfunctions",
                               worst <= TRANSFER_TOL, worst, TRANSFER_TOL))

    f = [_random_fraction(rng) for _ in range(N)]
    g = [_random_fraction(rng) for _ in range(M)]
    f_arr, g_arr = np.array(f, dtype=object), np.array(g, dtype=object)
    lhs, rhs = adjointness_check(G, f_arr, g_arr)
    results.append(CheckResult("(delta f, g)_H == (f, delta* g)_V", lhs == rhs, lhs, rhs))

    LV = laplacian_vertex(G).entries
    qf = vertex_inner(G, LV @ f_arr, f_arr) if N else 0
    df = boundary_apply(G, f_arr)
    energy = sum(x * x for x in df)
    results.append(CheckResult("(L^V f, f)_V == sum_h (delta f)^2 >= 0", qf == energy and energy >= 0, qf, energy))
    qg = hyperedge_inner(G, LH.entries @ g_arr, g_arr) if M else 0
    dg = coboundary_apply(G, g_arr)
    energy_g = vertex_inner(G, dg, dg)
    results.append(CheckResult("(L^H g, g)_H == (delta* g, delta* g)_V >= 0",
                               qg == energy_g and energy_g >= 0, qg, energy_g))

    if N and M:
        x = np.array([rng.gauss(0, 1) for _ in range(N)])
        y = np.array([rng.gauss(0, 1) for _ in range(M)])
        rv, rh = rayleigh_vertex(G, x), rayleigh_hyperedge(G, y)
        lo_v = vs.eigenvalues[-1]
        lo_h = hs.eigenvalues[-1]
        ok = (lo_v - SPECTRUM_TOL <= rv <= vs.largest + SPECTRUM_TOL
              and lo_h - SPECTRUM_TOL <= rh <= hs.largest + SPECTRUM_TOL)
        results.append(CheckResult("Rayleigh quotients lie in [mu_N, mu_1]", ok, [rv, rh],
                                   [[lo_v, vs.largest], [lo_h, hs.largest]]))

    kt = incidence_kernel(G, transpose=True)
    ok = all(_balanced_directly(G, vec) for vec in kt.basis)
    results.append(CheckResult("ker I^T vectors balance every hyperedge", ok and kt.nullity == mults[0],
                               kt.nullity, mults[0]))
    k = incidence_kernel(G)
    results.append(CheckResult("dim ker I == m_H", k.nullity == mults[1], k.nullity, mults[1]))

    zero_I = not np.any(incidence_matrix(G).entries)
    results.append(CheckResult("mu_1 == 0 iff every vertex is always a catalyst",
                               (vs.largest == 0.0) == zero_I, vs.largest, zero_I))

    stripped = []
    for h in G.hyperedges:
        c = h.catalysts
        stripped.append(Hyperedge(h.id, h.inputs - c, h.outputs - c) if c and (h.inputs - c or h.outputs - c) else h)
    bare = ChemicalHypergraph(G.vertices, tuple(stripped), relaxed=True)
    r0, r1 = exact_rank(incidence_matrix(G).entries), exact_rank(incidence_matrix(bare).entries)
    results.append(CheckResult("removing catalysts keeps rank I", r0 == r1, r0, r1))

    try:
        systems = enumerate_closed_systems(G)
    except TooManyHyperedges as exc:
        results.append(CheckResult("closed systems", True, None, None, f"skipped: {exc}"))
    else:
        inc = incidence_matrix(G).entries
        ids = [h.id for h in G.hyperedges]
        in_kernel = all(
            not np.any(inc @ np.array([h in s.hyperedge_ids for h in ids], dtype=np.int64))
            for s in systems
        )
        results.append(CheckResult("closed-system indicators lie in ker I", in_kernel, len(systems), True))
        rank = independence_rank(systems, ids)
        results.append(CheckResult("independent closed systems <= m_H", rank <= mults[1], rank, mults[1]))

    bip = bipartition(G)
    if bip.is_bipartite and M:
        hp = h_prime(G)
        results.append(CheckResult("bipartite: mu_1 >= h'", vs.largest >= float(hp) - SPECTRUM_TOL,
                                   vs.largest, hp))
    if is_graph(G):
        results.extend(_graph_component_checks(G))
    if all(len(h.inputs) == len(h.outputs) for h in G.hyperedges) and N:
        ones = np.ones(N, dtype=np.int64)
        LV1 = laplacian_vertex(G).entries @ ones
        ok = not np.any(LV1) and mults[0] >= 1
        results.append(CheckResult("balanced: constant function in ker L^V", ok, mults[0], ">= 1"))

    if flips:
        worst = 0.0
        for v in G.vertices:
            F_ = flip_vertex(G, v)
            worst = max(
                worst,
                _max_gap(spectrum(F_, "vertex").eigenvalues, vs.eigenvalues),
                _max_gap(spectrum(F_, "hyperedge").eigenvalues, hs.eigenvalues),
            )
        results.append(CheckResult("flipping any vertex keeps both spectra", worst <= SPECTRUM_TOL,
                                   worst, SPECTRUM_TOL))
    return results


@dataclass(frozen=True)
class ReferenceRow:
    instance: str
    quantity: str
    expected: object
    computed: object
    tol: float

    @property
    def delta(self):
        if isinstance(self.expected, str) or isinstance(self.computed, str):
            return 0.0 if self.expected == self.computed else None
        return abs(float(self.expected) - float(self.computed))

    @property
    def passed(self) -> bool:
        d = self.delta
        if d is None:
            return False
        if self.tol == 0:
            return self.expected == self.computed
        return d <= self.tol


def _blocks(G):
    res = bipartition(G)
    if not res.is_bipartite:
        return f"conflict at {res.conflict.vertex}"
    a, b = (",".join(G.ordered(block)) for block in res.partition)
    return f"{{{a}}}|{{{b}}}"


def reference_rows() -> list:
    """Known values on the built-in instances, next to what the library computes."""
    rows = []
    root = 1 / math.sqrt(2)

    G = catalog.two_reactions()
    hs = spectrum(G, "hyperedge")
    rows += [
        ReferenceRow("two-reactions", "mu_1^H", 2 + root, hs.eigenvalues[0], 1e-9),
        ReferenceRow("two-reactions", "mu_2^H", 2 - root, hs.eigenvalues[1], 1e-9),
        ReferenceRow("two-reactions", "mu_1^V", 2 + root, spectrum(G, "vertex").largest, 1e-9),
        ReferenceRow("two-reactions", "h'", Fraction(13, 5), h_prime(G), 0),
        ReferenceRow("two-reactions", "deg v1", 2, degrees(G)[0], 0),
        ReferenceRow("two-reactions", "m_V", 2, zero_multiplicities(G)[0], 0),
    ]

    G = catalog.branching_reunion()
    m_V, m_H = zero_multiplicities(G)
    kernel = incidence_kernel(G).basis
    rows += [
        ReferenceRow("branching-reunion", "m_H", 1, m_H, 0),
        ReferenceRow("branching-reunion", "m_V", 2, m_V, 0),
        ReferenceRow("branching-reunion", "ker I", "1,2,1", ",".join(map(str, kernel[0])) if kernel else "", 0),
        ReferenceRow("branching-reunion", "closed systems", 0, len(enumerate_closed_systems(G)), 0),
        ReferenceRow("branching-reunion", "components", 1, len(connected_components(G)), 0),
    ]

    G = catalog.single_hyperedge(3, 3, 1)
    rows += [
        ReferenceRow("single-hyperedge(N=3,k=3,m=1)", "mu^H", 2, laplacian_hyperedge(G).entries[0, 0], 0),
        ReferenceRow("single-hyperedge(N=3,k=3,m=1)", "m_V", 2, zero_multiplicities(G)[0], 0),
    ]
    G = catalog.single_hyperedge(3, 3, 3)
    rows.append(ReferenceRow("single-hyperedge(N=3,k=3,m=3)", "mu^H", 0, laplacian_hyperedge(G).entries[0, 0], 0))
    G = catalog.single_hyperedge(4, 2, 2)
    rows.append(ReferenceRow("single-hyperedge(N=4,k=2,m=2)", "mu^H", 4, laplacian_hyperedge(G).entries[0, 0], 0))

    G = catalog.catalysed_reaction()
    rows += [
        ReferenceRow("catalysed-reaction", "catalysts", "v3", ",".join(sorted(G.hyperedges[0].catalysts)), 0),
        ReferenceRow("catalysed-reaction", "deg v3", 1, degrees(G)[2], 0),
    ]

    for name in ("closed-chain", "source-sink"):
        G = catalog.INSTANCES[name]()
        systems = enumerate_closed_systems(G)
        rows.append(ReferenceRow(name, "closed systems", 1, len(systems), 0))
        rows.append(ReferenceRow(name, "m_H", 1, zero_multiplicities(G)[1], 0))

    G = catalog.bipartite_pair()
    rows += [
        ReferenceRow("bipartite-pair", "blocks", "{v1,v2,v3}|{v4,v5,v6}", _blocks(G), 0),
        ReferenceRow("bipartite-pair", "h'", 4, h_prime(G), 0),
    ]
    G = catalog.connected_pair()
    rows.append(ReferenceRow("connected-pair", "components", 1, len(connected_components(G)), 0))
    for n in (3, 4, 5):
        G = catalog.one_versus_rest(n)
        rows.append(ReferenceRow(f"one-versus-rest({n})", "m_V", 0, zero_multiplicities(G)[0], 0))
    return rows
