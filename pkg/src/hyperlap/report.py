"""Full per-instance report as a fixed-schema dict, plus its text rendering."""

from __future__ import annotations

from .checks import multiplicity_check, nonnegativity_checks, shared_spectrum_check
from .errors import TooManyHyperedges
from .model import ChemicalHypergraph, bipartition, connected_components, degrees, h_prime
from .spectra import spectrum, zero_multiplicities
from .structure import closed_system_cap, enumerate_closed_systems, independence_rank

SCHEMA_VERSION = 1


def _bipartiteness(G):
    res = bipartition(G)
    if res.is_bipartite:
        return {"partition": [G.ordered(b) for b in res.partition], "conflict": None}
    c = res.conflict
    return {
        "partition": None,
        "conflict": {
            "vertex": c.vertex,
            "chain": [
                {"hyperedge": s.hyperedge, "source": s.source, "target": s.target, "opposite": s.opposite}
                for s in c.chain
            ],
        },
    }


def build_report(G: ChemicalHypergraph) -> dict:
    m_V, m_H = zero_multiplicities(G)
    vs, hs = spectrum(G, "vertex"), spectrum(G, "hyperedge")
    hp = h_prime(G) if G.hyperedges else None

    cap = closed_system_cap()
    try:
        systems = enumerate_closed_systems(G, cap)
    except TooManyHyperedges as exc:
        closed = {"enumerated": False, "cap": cap, "systems": None, "independence_rank": None,
                  "notice": str(exc)}
    else:
        ids = [h.id for h in G.hyperedges]
        closed = {
            "enumerated": True,
            "cap": cap,
            "systems": [list(s.hyperedge_ids) for s in systems],
            "independence_rank": independence_rank(systems, ids),
            "notice": None,
        }

    checks = [multiplicity_check(G, (m_V, m_H)), shared_spectrum_check(vs, hs), *nonnegativity_checks(vs, hs)]
    return {
        "schema": SCHEMA_VERSION,
        "counts": {"vertices": G.n_vertices, "hyperedges": G.n_hyperedges},
        "degrees": dict(zip(G.vertices, degrees(G))),
        "components": [list(c.vertices) for c in connected_components(G)],
        "bipartite": _bipartiteness(G),
        "h_prime": None if hp is None else str(hp),
        "h_prime_value": None if hp is None else float(hp),
        "m_V": m_V,
        "m_H": m_H,
        "spectra": {"vertex": list(vs.eigenvalues), "hyperedge": list(hs.eigenvalues)},
        "closed_systems": closed,
        "checks": [c.as_dict() for c in checks],
    }


def fmt_values(values) -> str:
    return ", ".join(f"{x:.9g}" for x in values) if values else "(empty)"


def render_text(rep: dict) -> str:
    lines = [
        f"vertices: {rep['counts']['vertices']}  hyperedges: {rep['counts']['hyperedges']}",
        "degrees: " + (", ".join(f"{v}={d}" for v, d in rep["degrees"].items()) or "(none)"),
        f"components: {len(rep['components'])}  "
        + " ".join("{" + ",".join(c) + "}" for c in rep["components"]),
    ]
    bip = rep["bipartite"]
    if bip["partition"] is not None:
        a, b = bip["partition"]
        lines.append(f"bipartite: {{{','.join(a)}}} | {{{','.join(b)}}}")
    else:
        chain = " ".join(s["hyperedge"] for s in bip["conflict"]["chain"])
        lines.append(f"bipartite: no (conflict at {bip['conflict']['vertex']} via {chain})")
    lines.append(f"h': {rep['h_prime'] if rep['h_prime'] is not None else 'undefined (no hyperedges)'}")
    lines.append(f"m_V = {rep['m_V']}  m_H = {rep['m_H']}")
    lines.append("L^V: " + fmt_values(rep["spectra"]["vertex"]))
    lines.append("L^H: " + fmt_values(rep["spectra"]["hyperedge"]))
    cs = rep["closed_systems"]
    if cs["enumerated"]:
        shown = "; ".join("{" + ",".join(s) + "}" for s in cs["systems"]) or "none"
        lines.append(f"closed systems ({len(cs['systems'])}, independent {cs['independence_rank']}): {shown}")
    else:
        lines.append(f"closed systems: not enumerated ({cs['notice']})")
    for c in rep["checks"]:
        lines.append(f"[{'pass' if c['passed'] else 'FAIL'}] {c['name']}: {c['lhs']} vs {c['rhs']}")
    return "\n".join(lines)
