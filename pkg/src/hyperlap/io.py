"""JSON documents for hypergraphs.

A document is one object::

    {"vertices": ["v1", ...],
     "hyperedges": [{"id": "h1", "inputs": ["v1"], "outputs": ["v2"]}, ...]}

Canonical form sorts object keys, keeps the vertex and hyperedge lists in
declaration order and lists each side's vertices in vertex declaration order.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import DocumentSyntaxError
from .model import ChemicalHypergraph, validate

__all__ = ["to_document", "from_document", "dumps", "loads", "parse", "serialize"]


def to_document(G: ChemicalHypergraph) -> dict:
    return {
        "vertices": list(G.vertices),
        "hyperedges": [
            {"id": h.id, "inputs": G.ordered(h.inputs), "outputs": G.ordered(h.outputs)}
            for h in G.hyperedges
        ],
    }


def from_document(doc, *, allow_empty_side: bool = False) -> ChemicalHypergraph:
    return validate(doc, allow_empty_side=allow_empty_side)


def dumps(G: ChemicalHypergraph) -> str:
    return json.dumps(to_document(G), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str, *, allow_empty_side: bool = False) -> ChemicalHypergraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
            exc.lineno,
            exc.colno,
        ) from None
    return from_document(doc, allow_empty_side=allow_empty_side)


def parse(path, *, allow_empty_side: bool = False) -> ChemicalHypergraph:
    """Read a hypergraph document from ``path`` (UTF-8). OSError propagates."""
    text = Path(path).read_text(encoding="utf-8")
    return loads(text, allow_empty_side=allow_empty_side)


def serialize(G: ChemicalHypergraph, path=None) -> str:
    """Canonical JSON text of ``G``; also written to ``path`` when given."""
    text = dumps(G)
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text
