"""Command line interface.

Exit codes: 0 all checks passed, 1 some check failed or was skipped,
2 usage or parse error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import curvature, energy, generators, hodge, linalg
from .complex_core import ComplexError, SimplicialComplex, TooLargeError, euler_characteristic
from .documents import ParseError, parse_complex, parse_rational, rational, to_facet_text, to_json_document
from .verification import verify_complex

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CSV_F_COLUMNS = 6
EXPERIMENT_MAX_ELEMENTS = 1000


class UsageError(Exception):
    pass


def _add_source_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--input", metavar="PATH", help="facet text or JSON document ('-' for stdin)")
    src.add_argument("--generate", nargs="+", metavar=("NAME", "PARAM"),
                     help=f"named complex: {', '.join(generators.GENERATOR_NAMES)}")
    src.add_argument("--random", nargs=2, type=int, metavar=("N", "M"),
                     help="Whitney complex of a random graph with N vertices and M edges")
    p.add_argument("--seed", type=int, default=0, help="seed for --random and random functions")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--max-elements", type=int, default=energy.DEFAULT_MAX_ELEMENTS,
                   help="element ceiling for matrix work (default %(default)s)")


def load_complex(args) -> SimplicialComplex:
    if args.input:
        text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
        return parse_complex(text)
    if args.generate:
        name, *params = args.generate
        try:
            return generators.generate(name, *(int(p) for p in params))
        except (ValueError, TypeError) as exc:
            raise UsageError(str(exc)) from None
    if args.random:
        n, m = args.random
        try:
            return generators.random_whitney(n, m, args.seed)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    raise UsageError("one of --input, --generate, --random is required")


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_check(args) -> int:
    G = load_complex(args)
    if not len(G):
        raise UsageError("empty complex")
    rep = verify_complex(G, max_elements=args.max_elements, m_max=args.mmax)
    _emit(args, rep.to_dict(), rep.render())
    return EXIT_OK if rep.all_passed else EXIT_FAIL


def cmd_curvature(args) -> int:
    G = load_complex(args)
    if not len(G):
        raise UsageError("empty complex")
    prof = curvature.levitt_curvature(G)
    poly_ok = curvature.gauss_bonnet_polynomial_check(G)
    chi = euler_characteristic(G)
    ok = poly_ok and prof.total == chi
    payload = {
        "curvature": {str(v): rational(k) for v, k in prof.values.items()},
        "total": rational(prof.total),
        "chi": chi,
        "gauss_bonnet": "pass" if ok else "fail",
    }
    lines = [f"{v}: {rational(k)}" for v, k in prof.values.items()]
    lines.append(f"total {rational(prof.total)}  chi {chi}  gauss-bonnet {'pass' if ok else 'fail'}")
    if args.trials is not None:
        exp = curvature.index_expectation(G, args.trials, args.seed)
        match = exp.values == prof.values
        payload["index_expectation"] = {
            "values": {str(v): rational(k) for v, k in exp.values.items()},
            "exhaustive": exp.exhaustive,
            "samples": exp.samples,
            "seed": exp.seed,
            "equals_curvature": match,
        }
        mode = "exhaustive" if exp.exhaustive else f"{exp.samples} samples, seed {exp.seed}"
        lines.append(f"index expectation ({mode}): " + " ".join(rational(k) for k in exp.values.values()))
        if exp.exhaustive:
            ok = ok and match
            lines.append(f"expectation equals curvature: {match}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_betti(args) -> int:
    G = load_complex(args)
    if not len(G):
        raise UsageError("empty complex")
    if len(G) > args.max_elements:
        print(f"skipped: too large ({len(G)} > {args.max_elements} elements)", file=sys.stderr)
        return EXIT_FAIL
    b = hodge.betti(G)
    chi = euler_characteristic(G)
    ok = sum((-1) ** k * x for k, x in enumerate(b)) == chi
    _emit(args, {"betti": list(b), "chi": chi, "euler_poincare": "pass" if ok else "fail"},
          f"betti {' '.join(map(str, b))}\nchi {chi}  euler-poincare {'pass' if ok else 'fail'}")
    return EXIT_OK if ok else EXIT_FAIL


def parse_values(text: str, G: SimplicialComplex) -> dict[int, Fraction]:
    """"v:val,v:val,..." or a plain list assigned to the vertices in ascending order."""
    items = [s for s in text.replace(",", " ").split() if s]
    if items and all(":" in s for s in items):
        out = {}
        for s in items:
            v, val = s.split(":", 1)
            out[int(v)] = parse_rational(val)
        return out
    if len(items) != len(G.vertices):
        raise UsageError(f"expected {len(G.vertices)} values, got {len(items)}")
    return dict(zip(G.vertices, (parse_rational(s) for s in items)))


def cmd_ph(args) -> int:
    G = load_complex(args)
    if not len(G):
        raise UsageError("empty complex")
    if args.values:
        f = parse_values(args.values, G)
    else:
        f = curvature.random_vertex_function(G, random.Random(args.seed))
    try:
        idx = curvature.ph_indices(G, f)
    except curvature.NotLocallyInjectiveError as exc:
        raise UsageError(f"function is not locally injective on edge {list(exc.edge)}") from None
    total = sum(idx.values())
    chi = euler_characteristic(G)
    ok = total == chi
    _emit(args, {"values": {str(v): rational(f[v]) for v in G.vertices},
                 "indices": {str(v): i for v, i in idx.items()}, "sum": total, "chi": chi,
                 "poincare_hopf": "pass" if ok else "fail"},
          "\n".join(f"{v}: f={rational(f[v])} index={i}" for v, i in idx.items())
          + f"\nsum {total}  chi {chi}  poincare-hopf {'pass' if ok else 'fail'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_generate(args) -> int:
    G = load_complex(args)
    meta = {"generator": " ".join(args.generate)} if args.generate else {}
    if args.random:
        meta = {"generator": f"random {args.random[0]} {args.random[1]}", "seed": args.seed}
    sys.stdout.write(to_json_document(G, meta) if args.json else to_facet_text(G))
    return EXIT_OK


def experiment_row(seed: int, n: int, m: int, max_elements: int) -> dict:
    G = generators.random_whitney(n, m, seed)
    row = {"seed": seed, "n": len(G), "f": list(G.f_vector), "chi": euler_characteristic(G),
           "det_g": "", "nullity_s": ""}
    if len(G) <= max_elements:
        row["det_g"] = linalg.determinant(energy.green_matrix(G, max_elements=None))
        row["nullity_s"] = linalg.nullity(energy.sphere_matrix(G, max_elements=None))
    return row


def write_experiment_csv(rows: list[dict], out) -> None:
    width = max([CSV_F_COLUMNS] + [len(r["f"]) for r in rows])
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["seed", "n"] + [f"f{k}" for k in range(width)] + ["chi", "det_g", "nullity_s"])
    for r in rows:
        f = r["f"] + [0] * (width - len(r["f"]))
        writer.writerow([r["seed"], r["n"], *f, r["chi"], r["det_g"], r["nullity_s"]])


def cmd_experiment(args) -> int:
    if args.count < 1:
        raise UsageError("--count must be >= 1")
    n, m = args.random
    if not 0 <= m <= n * (n - 1) // 2:
        raise UsageError(f"m must lie in [0, {n * (n - 1) // 2}]")
    seeds = [args.seed + k for k in range(args.count)]
    jobs = [(s, n, m, args.max_elements) for s in seeds]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(experiment_row, *zip(*jobs)))
    else:
        rows = [experiment_row(*j) for j in jobs]
    buf = io.StringIO()
    write_experiment_csv(rows, buf)
    if args.output and args.output != "-":
        Path(args.output).write_text(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    nullities = Counter(r["nullity_s"] for r in rows if r["nullity_s"] != "")
    skipped = sum(1 for r in rows if r["nullity_s"] == "")
    bad_det = [r["seed"] for r in rows if r["det_g"] not in ("", 1, -1)]
    summary = ", ".join(f"{k}:{v}" for k, v in sorted(nullities.items()))
    print(f"rows {len(rows)}  skipped(too large) {skipped}  nullity(s) distribution {{{summary}}}",
          file=sys.stderr)
    if bad_det:
        print(f"non-unimodular Green matrix for seeds {bad_det}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="simplex-forge",
                                     description="Exact checks of Euler characteristic identities "
                                                 "on finite simplicial complexes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run the full verification suite")
    _add_source_args(p)
    p.add_argument("--mmax", type=int, default=5, help="highest power in the McKean-Singer check")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("curvature", help="Levitt curvature and Gauss-Bonnet")
    _add_source_args(p)
    p.add_argument("--trials", type=int, help="also compute the index expectation")
    p.set_defaults(func=cmd_curvature)

    p = sub.add_parser("betti", help="Betti numbers and Euler-Poincare")
    _add_source_args(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("ph", help="Poincare-Hopf indices of a vertex function")
    _add_source_args(p)
    p.add_argument("--values", help="'v:val,...' or values in ascending vertex order (default: "
                                    "random ordering from --seed)")
    p.set_defaults(func=cmd_ph)

    p = sub.add_parser("generate", help="write a complex as facet text (or JSON with --json)")
    _add_source_args(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("experiment", help="sphere Green matrix nullity experiment (CSV)")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--random", nargs=2, type=int, default=[20, 100], metavar=("N", "M"))
    p.add_argument("--seed", type=int, default=0, help="first seed; row k uses seed + k")
    p.add_argument("--output", "-o", help="CSV path (default stdout)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--max-elements", type=int, default=EXPERIMENT_MAX_ELEMENTS,
                   help="rows above this size get blank det_g/nullity_s (default %(default)s)")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, ParseError, ComplexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TooLargeError as exc:
        print(f"skipped: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
