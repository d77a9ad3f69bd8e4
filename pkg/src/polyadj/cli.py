"""Command line front end.

Subcommands: analyze (full report for one polytope file), gen (write a
named or random instance), census (batch random instances to CSV plus a
JSON summary), spectrum (candidate Q-codegrees of a normal configuration).

Exit codes: 0 success, 2 parse error (bad file or arguments), 3 invalid
input (empty / unbounded / lower-dimensional / non-lattice polytope, bad
configuration, dimension above POLYADJ_MAX_DIM), 4 internal consistency
failure (an exact cross-check refused the computed answer).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Optional

from .adjunction import AnalysisReport, adjunction_data, analyze, core_config, raw_critical_shift
from .errors import InternalInconsistencyError, ParseError, PolyadjError
from .generators import SplitMix64, cube, fig1, random_lattice_polytope, scaled_simplex
from .polyfile import (
    config_from_document,
    format_polytope,
    parse_document,
    polytope_from_document,
    raw_inequalities,
)
from .polytope import dilate, vertices
from .ratmath import format_fraction, parse_fraction
from .spectrum import check_necessary_condition, spectrum_superset

DEFAULT_MAX_DIM = 8


def _max_dim() -> int:
    raw = os.environ.get("POLYADJ_MAX_DIM")
    if raw is None:
        return DEFAULT_MAX_DIM
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"POLYADJ_MAX_DIM must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError("POLYADJ_MAX_DIM must be positive")
    return cap


def _check_dim(d: int) -> None:
    cap = _max_dim()
    if d > cap:
        raise ValueError(f"dimension {d} exceeds the safety cap POLYADJ_MAX_DIM={cap}")


def _fr(x) -> str:
    return format_fraction(Fraction(x))


def _point(p) -> list:
    return [_fr(c) for c in p]


def _report_document(report: AnalysisReport, raw_c_star: Optional[Fraction]) -> dict:
    data = report.data
    p = data.polytope
    witness = report.fan_info.threshold_witness
    lem = report.lemmas
    doc = {
        "input": {
            "dim": p.dim,
            "n_facets": p.n_facets,
            "normals": [list(a) for a in p.normals],
            "rhs": [_fr(b) for b in p.rhs],
            "vertices": [_point(v) for v in vertices(p).vertices],
        },
        "qcd": _fr(data.qcodegree),
        "c_star": _fr(data.critical_shift),
        "core": {
            "dim": data.core.dim,
            "vertices": [_point(v) for v in data.core.vertices],
            "affine_hull": [{"normal": list(a), "value": _fr(beta)}
                            for a, beta in data.core.subspace.equations],
        },
        "core_normals": [list(a) for a in data.core_normals],
        "acore": {
            "dim": data.acore.dim,
            "vertices": [_point(v) for v in data.acore.vertices],
        },
        "fan": {
            "smooth": report.fan_info.smooth,
            "gorenstein_index": report.fan_info.gorenstein_index,
            "canonicity_threshold": _fr(report.fan_info.canonicity_threshold),
            "threshold_witness": None if witness is None else {
                "cone_rays": [list(r) for r in witness.cone.rays],
                "point": list(witness.point),
                "height": _fr(witness.height),
            },
        },
        "lemmas": {
            "origin_in_relative_interior": lem.origin_in_relative_interior,
            "core_normals_are_acore_vertices": lem.core_normals_are_acore_vertices,
            "alpha": _fr(lem.alpha),
            "alpha_is_canonical": lem.alpha_is_canonical,
            "scaled_interior_lattice_points": None if lem.scaled_interior_lattice_points is None
                else [_point(v) for v in lem.scaled_interior_lattice_points],
            "scaled_check_holds": lem.scaled_check_holds,
            "shift_vector": [_fr(v) for v in lem.shift_vector],
            "shift_is_integral": lem.shift_is_integral,
            "all_hold": lem.all_hold,
        },
        "spectrum": {
            "step": _fr(report.spectrum.step),
            "epsilon": _fr(report.spectrum.epsilon),
            "values": [_fr(v) for v in report.spectrum.values],
            "qcd_in_superset": report.qcodegree_in_superset,
        },
    }
    if raw_c_star is not None:
        doc["raw_c_star"] = _fr(raw_c_star)
    return doc


def _render_text(doc: dict) -> str:
    def pts(items):
        return " ".join("(" + ", ".join(v) + ")" for v in items) if items else "none"

    def vecs(items):
        return " ".join("(" + ", ".join(str(x) for x in a) + ")" for a in items) if items else "none"

    lines = []
    lines.append(f"dim: {doc['input']['dim']}")
    lines.append(f"facets: {doc['input']['n_facets']}")
    lines.append(f"c_star: {doc['c_star']}")
    lines.append(f"qcd: {doc['qcd']}")
    if "raw_c_star" in doc:
        lines.append(f"raw_c_star: {doc['raw_c_star']}")
    lines.append(f"core dim: {doc['core']['dim']}")
    lines.append(f"core vertices: {pts(doc['core']['vertices'])}")
    hull = doc["core"]["affine_hull"]
    if hull:
        eqs = "; ".join("(" + ", ".join(str(x) for x in e["normal"]) + f") . x = {e['value']}" for e in hull)
    else:
        eqs = "all of space"
    lines.append(f"core affine hull: {eqs}")
    lines.append(f"core normals: {vecs(doc['core_normals'])}")
    lines.append(f"acore dim: {doc['acore']['dim']}")
    lines.append(f"acore vertices: {pts(doc['acore']['vertices'])}")
    fan = doc["fan"]
    idx = fan["gorenstein_index"]
    lines.append(f"fan: smooth={str(fan['smooth']).lower()}"
                 f" gorenstein_index={'none' if idx is None else idx}"
                 f" canonicity_threshold={fan['canonicity_threshold']}")
    if fan["threshold_witness"] is not None:
        w = fan["threshold_witness"]
        lines.append(f"threshold witness: point ({', '.join(str(x) for x in w['point'])})"
                     f" height {w['height']}")
    lem = doc["lemmas"]

    def mark(value):
        if value is None:
            return "skipped"
        return "pass" if value else "FAIL"

    lines.append("lemma checks:"
                 f" origin_in_relint={mark(lem['origin_in_relative_interior'])}"
                 f" acore_vertices={mark(lem['core_normals_are_acore_vertices'])}"
                 f" scaled_lattice={mark(lem['scaled_check_holds'])}"
                 f" shift_integral={mark(lem['shift_is_integral'])}")
    lines.append(f"lemma alpha: {lem['alpha']} (canonical: {str(lem['alpha_is_canonical']).lower()})")
    lines.append(f"shift vector: ({', '.join(lem['shift_vector'])})")
    sp = doc["spectrum"]
    lines.append(f"spectrum step: {sp['step']}")
    values = " ".join(sp["values"]) if sp["values"] else "none"
    lines.append(f"spectrum values (>= {sp['epsilon']}): {values}")
    member = sp["qcd_in_superset"]
    lines.append(f"qcd in superset: {'n/a (below epsilon)' if member is None else str(member).lower()}")
    return "\n".join(lines) + "\n"


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write_output(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        return
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)


def cmd_analyze(args) -> int:
    doc = parse_document(_read_input(args.file))
    if doc.kind == "A":
        raise ValueError("analyze expects a polytope file (H or V section)")
    _check_dim(doc.dim)
    raw_c: Optional[Fraction] = None
    if args.raw:
        raw_c = raw_critical_shift(raw_inequalities(doc))
    p = polytope_from_document(doc)
    report = analyze(p, alpha=args.alpha, epsilon=args.epsilon)
    document = _report_document(report, raw_c)
    if args.format == "json":
        _write_output(json.dumps(document, indent=2) + "\n", args.out)
    else:
        _write_output(_render_text(document), args.out)
    return 0


def cmd_gen(args) -> int:
    family = args.family
    params = args.params
    comments = []

    def need(n: int, usage: str):
        if len(params) != n:
            raise ValueError(f"{family} takes {usage}")

    if family == "fig1":
        need(0, "no parameters")
        p = fig1()
        comments.append("polyadj gen fig1")
    elif family == "cube":
        need(1, "one parameter: d")
        _check_dim(params[0])
        p = cube(params[0])
        comments.append(f"polyadj gen cube {params[0]}")
    elif family == "simplex-scaled":
        need(2, "two parameters: d a")
        _check_dim(params[0])
        p = scaled_simplex(params[0], params[1])
        comments.append(f"polyadj gen simplex-scaled {params[0]} {params[1]}")
    elif family == "random":
        need(3, "three parameters: d n seed")
        d, n, seed = params
        _check_dim(d)
        p = random_lattice_polytope(d, n, seed, box=args.box)
        comments.append(f"polyadj gen random {d} {n} {seed}")
        comments.append(f"prng splitmix64 seed={seed} points={n} box={args.box}")
    else:
        raise ValueError(f"unknown family {family!r}")
    _write_output(format_polytope(p, kind="H", comments=comments), args.out)
    return 0


CENSUS_COLUMNS = ("instance", "seed", "qcd", "c_star", "core_dim", "n_core_normals",
                  "smooth", "gorenstein_index", "canonicity_threshold", "alpha_canonical",
                  "lemmas_ok", "qcd_in_superset", "dilation_check")


def cmd_census(args) -> int:
    if args.count < 0:
        raise ValueError("count must be nonnegative")
    _check_dim(args.dim)
    points = args.points if args.points is not None else args.dim + 5
    master = SplitMix64(args.seed)
    rows = []
    lemma_failures = 0
    smooth_count = 0
    none_index_count = 0
    max_index: Optional[int] = None
    dilation_checks = 0
    dilation_failures = 0
    qcds_above: set[Fraction] = set()
    for i in range(args.count):
        iseed = master.next_u64()
        p = random_lattice_polytope(args.dim, points, iseed, box=args.box)
        report = analyze(p, alpha=args.alpha, epsilon=args.epsilon)
        data = report.data
        ok = report.lemmas.all_hold
        if not ok:
            lemma_failures += 1
        if report.fan_info.smooth:
            smooth_count += 1
        idx = report.fan_info.gorenstein_index
        if idx is None:
            none_index_count += 1
        elif max_index is None or idx > max_index:
            max_index = idx
        if report.lemmas.alpha_is_canonical and data.qcodegree >= args.epsilon:
            qcds_above.add(data.qcodegree)
        # dilation spot check on every fifth instance
        if i % 5 == 0:
            dilation_checks += 1
            doubled = adjunction_data(dilate(p, 2))
            dilation = "pass" if doubled.qcodegree == data.qcodegree / 2 else "fail"
            if dilation == "fail":
                dilation_failures += 1
        else:
            dilation = "-"
        member = report.qcodegree_in_superset
        rows.append((str(i), str(iseed), _fr(data.qcodegree), _fr(data.critical_shift),
                     str(data.core.dim), str(len(data.core_normals)),
                     str(report.fan_info.smooth).lower(),
                     "none" if idx is None else str(idx),
                     _fr(report.fan_info.canonicity_threshold),
                     str(report.lemmas.alpha_is_canonical).lower(),
                     str(ok).lower(),
                     "-" if member is None else str(member).lower(),
                     dilation))
    header = ["# polyadj census v1",
              f"# dim={args.dim} count={args.count} seed={args.seed} box={args.box}"
              f" points={points} epsilon={_fr(args.epsilon)}"
              f" alpha={'-' if args.alpha is None else _fr(args.alpha)}",
              ",".join(CENSUS_COLUMNS)]
    csv_text = "\n".join(header + [",".join(row) for row in rows]) + "\n"
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write(csv_text)
    summary = {
        "count": args.count,
        "dim": args.dim,
        "seed": args.seed,
        "box": args.box,
        "points": points,
        "epsilon": _fr(args.epsilon),
        "alpha": None if args.alpha is None else _fr(args.alpha),
        "distinct_qcd_above_epsilon": [_fr(q) for q in sorted(qcds_above, reverse=True)],
        "lemma_failures": lemma_failures,
        "smooth_count": smooth_count,
        "not_q_gorenstein_count": none_index_count,
        "max_gorenstein_index": max_index,
        "dilation_checks": dilation_checks,
        "dilation_failures": dilation_failures,
        "csv": args.out,
    }
    sys.stdout.write(json.dumps(summary, indent=2) + "\n")
    return 0


def cmd_spectrum(args) -> int:
    if args.config is None and args.from_polytope is None:
        raise ValueError("give a configuration file or --from-polytope")
    if args.config is not None and args.from_polytope is not None:
        raise ValueError("give either a configuration file or --from-polytope, not both")
    if args.from_polytope is not None:
        doc = parse_document(_read_input(args.from_polytope))
        if doc.kind == "A":
            raise ValueError("--from-polytope expects a polytope file; pass the config positionally")
        _check_dim(doc.dim)
        cfg = core_config(adjunction_data(polytope_from_document(doc)))
    else:
        doc = parse_document(_read_input(args.config))
        _check_dim(doc.dim)
        cfg = config_from_document(doc)
    superset = spectrum_superset(cfg, args.epsilon)
    out = {
        "dim": cfg.dim,
        "normals": [list(a) for a in cfg.normals],
        "step": _fr(superset.step),
        "epsilon": _fr(superset.epsilon),
        "values": [_fr(v) for v in superset.values],
    }
    if args.check is not None:
        ok, witness = check_necessary_condition(cfg, args.check)
        out["check"] = {
            "c": _fr(args.check),
            "admissible": ok,
            "witness": None if witness is None else _point(witness),
        }
    _write_output(json.dumps(out, indent=2) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyadj",
        description="Exact adjunction invariants of lattice polytopes: "
                    "Q-codegree, core, core normals, normal fan singularities, "
                    "and finite Q-codegree candidate sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="full report for one polytope file ('-' = stdin)")
    pa.add_argument("file", help="polytope file with an H or V section, or - for stdin")
    pa.add_argument("--epsilon", type=parse_fraction, default=Fraction(1, 2),
                    help="spectrum cutoff (default 1/2)")
    pa.add_argument("--alpha", type=parse_fraction, default=None,
                    help="canonicity level for the lemma checks (default: computed threshold)")
    pa.add_argument("--format", choices=("json", "text"), default="json")
    pa.add_argument("--out", default=None, help="output path (default stdout)")
    pa.add_argument("--raw", action="store_true",
                    help="also report the critical shift of the H rows exactly as written")
    pa.set_defaults(func=cmd_analyze)

    pg = sub.add_parser("gen", help="write a generated instance in canonical H form")
    pg.add_argument("family", choices=("fig1", "cube", "simplex-scaled", "random"))
    pg.add_argument("params", nargs="*", type=int,
                    help="fig1: none; cube: d; simplex-scaled: d a; random: d n seed")
    pg.add_argument("--box", type=int, default=5, help="box radius for random (default 5)")
    pg.add_argument("--out", default=None, help="output path (default stdout)")
    pg.set_defaults(func=cmd_gen)

    pc = sub.add_parser("census", help="analyze random instances; CSV rows plus JSON summary")
    pc.add_argument("count", type=int)
    pc.add_argument("dim", type=int)
    pc.add_argument("--alpha", type=parse_fraction, default=None)
    pc.add_argument("--epsilon", type=parse_fraction, default=Fraction(1, 2))
    pc.add_argument("--seed", type=int, default=0)
    pc.add_argument("--box", type=int, default=5)
    pc.add_argument("--points", type=int, default=None,
                    help="points per draw (default dim + 5)")
    pc.add_argument("--out", default="census.csv", help="CSV path (default census.csv)")
    pc.set_defaults(func=cmd_census)

    ps = sub.add_parser("spectrum", help="candidate Q-codegrees of a normal configuration")
    ps.add_argument("config", nargs="?", default=None,
                    help="configuration file with an A section")
    ps.add_argument("--from-polytope", default=None,
                    help="derive the configuration from this polytope's core normals")
    ps.add_argument("--epsilon", type=parse_fraction, default=Fraction(1, 2))
    ps.add_argument("--check", type=parse_fraction, default=None,
                    help="also test whether this c admits an integral shift")
    ps.add_argument("--out", default=None, help="output path (default stdout)")
    ps.set_defaults(func=cmd_spectrum)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"polyadj: parse error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"polyadj: {exc}", file=sys.stderr)
        return 2
    except InternalInconsistencyError as exc:
        print(f"polyadj: internal inconsistency: {exc}", file=sys.stderr)
        return 4
    except (PolyadjError, ValueError) as exc:
        print(f"polyadj: invalid input: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
