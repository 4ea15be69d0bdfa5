"""Command line front end: ``weakfrieze <command> --input FILE ...``.

Exit codes: 0 on success (a check that answers "no" is still a success),
2 for invalid input, 3 when gluing hypotheses are violated.
"""

from __future__ import annotations

import argparse
from concurrent.futures import ProcessPoolExecutor
import json
import random
import sys

from .frieze import (
    GluingError, cc_frieze, glue_many, is_weak_frieze, ptolemy_witness,
    satisfies_tpath_formula, tpath_formula_witness,
)
from .generate import random_dissection, random_instance, perturb_value
from .pattern import NonUnitEdge, emit_json, emit_svg, emit_text, render_pattern, unimodular_witness
from .polygon import InvalidInput, Polygon, crosses
from .serialize import (
    load_json, map_to_json, parse_dissection, parse_map, parse_pieces,
    parse_polygon, parse_semifield,
)
from .tpath import enumerate_tpaths, tpath_sum, tpath_weight

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_HYPOTHESIS = 3


def _dump(obj):
    return json.dumps(obj, sort_keys=False) + "\n"


def _map_and_dissection(args):
    doc = load_json(args.input)
    f = parse_map(doc)
    d = parse_dissection(doc, f.polygon)
    return doc, f, d


def cmd_tpaths(args):
    doc = load_json(args.input)
    p = parse_polygon(doc)
    d = parse_dissection(doc, p)
    if args.from_ is None or args.to is None:
        raise InvalidInput("tpaths needs --from and --to")
    paths = enumerate_tpaths(p, d, args.from_, args.to)
    out = {"from": args.from_, "to": args.to, "paths": [list(pi) for pi in paths],
           "count": len(paths)}
    f = None
    if args.values is not None:
        f = parse_map(load_json(args.values))
    elif "values" in doc:
        f = parse_map(doc)
    if f is not None:
        if f.polygon != p:
            raise InvalidInput(f"values are for a {f.polygon.n}-gon, not a {p.n}-gon")
        K = f.semifield
        out["semifield"] = K.name
        out["weights"] = [K.to_json(tpath_weight(f, pi)) for pi in paths]
        out["sum"] = K.to_json(tpath_sum(f, d, args.from_, args.to))
    if args.format == "svg":
        return emit_svg(p, d, f, paths=paths)
    return _dump(out)


def cmd_glue(args):
    doc = load_json(args.input)
    p = parse_polygon(doc)
    K = parse_semifield(doc)
    d = parse_dissection(doc, p)
    pieces = parse_pieces(doc, p, K)
    f = glue_many(p, d, pieces, semifield=K)
    return _format_map(f, d, args)


def _format_map(f, d, args):
    if args.format == "text":
        return emit_text(render_pattern(f), repeat=args.repeat_columns)
    if args.format == "svg":
        return emit_svg(f.polygon, d, f)
    return _dump(map_to_json(f, d))


def _diag_list(pair):
    return [list(x) for x in pair]


def cmd_check(args):
    _, f, d = _map_and_dissection(args)
    selected = [name for name in ("frieze", "weak", "tpath", "theorem_a", "unimodular")
                if getattr(args, name)]
    if not selected:
        selected = ["frieze", "weak", "tpath", "theorem_a", "unimodular"]
    report = {}
    witnesses = {}
    notes = {}
    if "frieze" in selected:
        w = ptolemy_witness(f)
        report["frieze"] = w is None
        if w is not None:
            witnesses["frieze"] = _diag_list(w)
    if "weak" in selected:
        w = ptolemy_witness(f, d)
        report["weak"] = w is None
        if w is not None:
            witnesses["weak"] = _diag_list(w)
    if "tpath" in selected:
        w = tpath_formula_witness(f, d)
        report["tpath"] = w is None
        if w is not None:
            witnesses["tpath"] = list(w)
    if "theorem_a" in selected:
        weak = is_weak_frieze(f, d)
        tp = satisfies_tpath_formula(f, d)
        report["theorem_a"] = {"weak": weak, "tpath": tp, "agree": weak == tp}
    if "unimodular" in selected:
        try:
            w = unimodular_witness(f)
        except NonUnitEdge as exc:
            report["unimodular"] = None
            notes["unimodular"] = str(exc)
        else:
            report["unimodular"] = w is None
            if w is not None:
                witnesses["unimodular"] = list(w)
    if witnesses:
        report["counterexamples"] = witnesses
    if notes:
        report["preconditions"] = notes
    return _dump(report)


def cmd_pattern(args):
    _, f, d = _map_and_dissection(args)
    grid = render_pattern(f)
    if args.format == "json":
        return emit_json(grid) + "\n"
    if args.format == "svg":
        return emit_svg(f.polygon, d, f)
    return emit_text(grid, repeat=args.repeat_columns)


def cmd_cc(args):
    doc = load_json(args.input)
    p = parse_polygon(doc)
    field = "triangulation" if "triangulation" in doc else "dissection"
    d = parse_dissection(doc, p, field)
    K = parse_semifield(doc)
    f = cc_frieze(p, d, semifield=K)
    return _format_map(f, d, args)


def fuzz_instance(seed, k, min_n, max_n):
    """One Theorem A trial: glue random pieces, maybe perturb a cross value."""
    rng = random.Random(f"{seed}:{k}")
    p = Polygon(rng.randint(min_n, max_n))
    d = random_dissection(p, rng)
    _, f = random_instance(p, d, rng)
    perturbed = None
    if k % 2 == 1:
        cross = [e for e in p.diagonals() if any(crosses(p, e, x) for x in d.diagonals)]
        if cross:
            e = rng.choice(cross)
            f = f.replace({e: perturb_value(f[e])})
            perturbed = list(e)
    weak = is_weak_frieze(f, d)
    tp = satisfies_tpath_formula(f, d)
    return {"n": p.n, "dissection": [list(e) for e in d.sorted()], "perturbed": perturbed,
            "weak": weak, "tpath": tp, "agree": weak == tp}


def _fuzz_star(job):
    return fuzz_instance(*job)


def cmd_fuzz(args):
    if not 3 <= args.min_n <= args.max_n:
        raise InvalidInput("need 3 <= --min-n <= --max-n")
    jobs = [(args.seed, k, args.min_n, args.max_n) for k in range(args.count)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_fuzz_star, jobs))
    else:
        results = [_fuzz_star(j) for j in jobs]
    disagreements = [r for r in results if not r["agree"]]
    out = {"seed": args.seed, "instances": len(results),
           "weak_true": sum(r["weak"] for r in results),
           "agree": len(results) - len(disagreements),
           "disagreements": disagreements}
    if args.verbose:
        out["results"] = results
    return _dump(out)


COMMANDS = {
    "tpaths": cmd_tpaths,
    "glue": cmd_glue,
    "check": cmd_check,
    "pattern": cmd_pattern,
    "cc": cmd_cc,
    "fuzz": cmd_fuzz,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="weakfrieze", description="Friezes, weak friezes and T-paths on polygon dissections.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, formats=("json",), default="json"):
        sp.add_argument("--input", required=True, help="input JSON file")
        sp.add_argument("--format", choices=formats, default=default)
        sp.add_argument("--output", help="write here instead of stdout")
        sp.add_argument("--jobs", type=int, default=1)

    sp = sub.add_parser("tpaths", help="enumerate T-paths, optionally with weights")
    common(sp, ("json", "svg"))
    sp.add_argument("--from", dest="from_", type=int)
    sp.add_argument("--to", type=int)
    sp.add_argument("--values", help="values file; defaults to \"values\" in --input")

    sp = sub.add_parser("glue", help="glue per-cell pieces into a weak frieze")
    common(sp, ("json", "text", "svg"))
    sp.add_argument("--repeat-columns", type=int, default=1)

    sp = sub.add_parser("check", help="frieze / weak frieze / T-path formula checks")
    common(sp)
    sp.add_argument("--frieze", action="store_true")
    sp.add_argument("--weak", action="store_true")
    sp.add_argument("--tpath", action="store_true")
    sp.add_argument("--theorem-a", dest="theorem_a", action="store_true")
    sp.add_argument("--unimodular", action="store_true")

    sp = sub.add_parser("pattern", help="render the frieze pattern")
    common(sp, ("text", "json", "svg"), "text")
    sp.add_argument("--repeat-columns", type=int, default=1)

    sp = sub.add_parser("cc", help="integer frieze of a triangulation")
    common(sp, ("json", "text", "svg"))
    sp.add_argument("--repeat-columns", type=int, default=1)

    sp = sub.add_parser("fuzz", help="seeded Theorem A campaign")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=50)
    sp.add_argument("--min-n", type=int, default=4)
    sp.add_argument("--max-n", type=int, default=8)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--verbose", action="store_true")
    sp.add_argument("--output")
    return parser


def _error(kind, exc, out):
    out.write(_dump({"error": {"type": kind, "message": str(exc)}}))


def main(argv=None, stdout=None):
    out = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        text = COMMANDS[args.command](args)
    except GluingError as exc:
        _error("hypothesis", exc, out)
        return EXIT_HYPOTHESIS
    except (InvalidInput, ValueError, TypeError) as exc:
        _error("validation", exc, out)
        return EXIT_INVALID
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
