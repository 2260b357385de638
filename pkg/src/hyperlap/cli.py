"""Command-line interface.

Exit codes: 0 success, 1 a check failed, 2 bad input, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io
from .checks import invariant_suite, reference_rows
from .errors import HyperlapError, NumericError
from .generate import FAMILIES, random_hypergraph
from .model import flip_vertex
from .report import build_report, fmt_values, render_text
from .spectra import spectrum

EXIT_OK, EXIT_CHECK, EXIT_INPUT, EXIT_NUMERIC = 0, 1, 2, 3


def _load(args):
    return io.parse(args.file, allow_empty_side=getattr(args, "allow_empty_side", False))


def cmd_spectrum(args):
    G = _load(args)
    which = ["vertex", "hyperedge"] if args.operator == "both" else [args.operator]
    spectra = [spectrum(G, w) for w in which]
    if args.json:
        out = {s.operator: {"eigenvalues": list(s.eigenvalues), "zero_multiplicity": s.zero_multiplicity}
               for s in spectra}
        print(json.dumps(out, sort_keys=True))
    else:
        for s in spectra:
            tag = "m_V" if s.operator == "vertex" else "m_H"
            prefix = ("L^V: " if s.operator == "vertex" else "L^H: ") if len(spectra) > 1 else ""
            print(f"{prefix}{fmt_values(s.eigenvalues)}; {tag} = {s.zero_multiplicity}")
    return EXIT_OK


def cmd_report(args):
    rep = build_report(_load(args))
    print(json.dumps(rep, sort_keys=True, indent=2) if args.json else render_text(rep))
    return EXIT_OK if all(c["passed"] for c in rep["checks"]) else EXIT_CHECK


def cmd_random(args):
    G = random_hypergraph(args.vertices, args.hyperedges, args.seed, args.family)
    sys.stdout.write(io.dumps(G))
    return EXIT_OK


def cmd_flip(args):
    G = io.parse(args.file, allow_empty_side=True)
    sys.stdout.write(io.dumps(flip_vertex(G, args.vertex)))
    return EXIT_OK


def cmd_verify(args):
    G = _load(args)
    results = invariant_suite(G)
    for r in results:
        if not r.passed:
            print(f"violated: {r.name}: {r.lhs} vs {r.rhs} {r.detail}".rstrip())
            return EXIT_CHECK
    print(f"ok: {len(results)} checks passed")
    return EXIT_OK


def cmd_examples(args):
    rows = reference_rows()
    header = f"{'instance':32} {'quantity':16} {'expected':>22} {'computed':>22} {'|delta|':>10}  result"
    print(header)
    for r in rows:
        d = r.delta
        print(f"{r.instance:32} {r.quantity:16} {str(r.expected):>22.22} {str(r.computed):>22.22} "
              f"{'-' if d is None else format(d, '.2e'):>10}  {'pass' if r.passed else 'FAIL'}")
    failed = sum(not r.passed for r in rows)
    print(f"{len(rows) - failed}/{len(rows)} passed")
    return EXIT_OK if not failed else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hyperlap", description="Laplacian spectra of chemical hypergraphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("spectrum", help="eigenvalues of L^V and/or L^H (largest first)")
    s.add_argument("file")
    s.add_argument("--operator", choices=["vertex", "hyperedge", "both"], default="both")
    s.add_argument("--json", action="store_true")
    s.add_argument("--allow-empty-side", action="store_true",
                   help="accept hyperedges with an empty side, as produced by 'flip'")
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("report", help="full structural and spectral report")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.add_argument("--allow-empty-side", action="store_true")
    s.set_defaults(func=cmd_report)

    s = sub.add_parser("random", help="seeded random hypergraph document")
    s.add_argument("--vertices", type=int, required=True)
    s.add_argument("--hyperedges", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--family", choices=FAMILIES, default="generic")
    s.set_defaults(func=cmd_random)

    s = sub.add_parser("flip", help="reverse the role of one vertex in every hyperedge")
    s.add_argument("file")
    s.add_argument("--vertex", required=True)
    s.set_defaults(func=cmd_flip)

    s = sub.add_parser("verify", help="run the identity suite on one instance")
    s.add_argument("file")
    s.add_argument("--allow-empty-side", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("examples", help="known values on built-in instances")
    s.set_defaults(func=cmd_examples)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NumericError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (HyperlapError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
