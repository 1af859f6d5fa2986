"""Command-line interface: form invariants, twist computation and the
corpus verification suites.

File formats
  form file: {"rank": n, "gram": [["a11", ...], ...]} with rational strings
  rep file:  {"group": {"degree": n, "generators": {name: "(1 2)(3 4)"}},
              "images": {name: [["1","0"], ["0","-1"]]}}

Exit codes: 0 all checks pass, 1 a check failed, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .arith import parse_rat, rat_str
from .galois import load_corpus, standard_corpus
from .groupalg import FiniteGroup, OrthRep, parse_cycles
from .harness import SUITES, run_suites
from .quadform import QuadForm, invariants
from .twist import TwistInput, twist, verify_thm03_w1


class InputError(Exception):
    pass


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc


def _parse_form(doc: dict, origin: str) -> QuadForm:
    try:
        gram = [[parse_rat(x) for x in row] for row in doc["gram"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{origin}: bad gram matrix: {exc}") from exc
    if "rank" in doc and doc["rank"] != len(gram):
        raise InputError(f"{origin}: declared rank {doc['rank']} != gram size {len(gram)}")
    try:
        return QuadForm(gram)
    except ValueError as exc:
        raise InputError(f"{origin}: {exc}") from exc


def _parse_rep(doc: dict, form: QuadForm, origin: str) -> OrthRep:
    try:
        gspec = doc["group"]
        degree = gspec["degree"]
        gens = {name: parse_cycles(c, degree) for name, c in gspec["generators"].items()}
        G = FiniteGroup.from_generators(gens.values(), degree)
        images = {
            gens[name]: [[parse_rat(x) for x in row] for row in mat]
            for name, mat in doc["images"].items()
        }
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{origin}: bad representation record: {exc}") from exc
    try:
        return OrthRep.from_generator_images(G, form, images)
    except ValueError as exc:
        raise InputError(f"{origin}: {exc}") from exc


def _gram_strings(q: QuadForm):
    return [[rat_str(x) for x in row] for row in q.gram]


def cmd_invariants(args) -> int:
    doc = _load_json(args.form)
    q = _parse_form(doc, args.form)
    record = invariants(q).as_record()
    if args.format == "json":
        print(json.dumps(record, indent=1))
    else:
        for k, v in record.items():
            print(f"{k:10} {v}")
    return 0


def cmd_twist(args) -> int:
    form = _parse_form(_load_json(args.form), args.form)
    rep = _parse_rep(_load_json(args.rep), form, args.rep)
    corpus = load_corpus(args.corpus) if args.corpus else standard_corpus()
    torsors = {A.label: A for A in corpus}
    if args.torsor not in torsors:
        raise InputError(f"unknown torsor {args.torsor!r}; corpus has {sorted(torsors)}")
    A = torsors[args.torsor]
    if rep.group != A.group:
        raise InputError(
            f"group mismatch: representation group has order {rep.group.order} "
            f"on {rep.group.degree} points, torsor group order {A.group.order} "
            f"on {A.group.degree} points"
        )
    out = twist(TwistInput(form, rep, A))
    record = {
        "torsor": A.label,
        "gram": _gram_strings(out.form),
        "invariants": invariants(out.form).as_record(),
        "w1_product_formula": verify_thm03_w1(TwistInput(form, rep, A)),
    }
    if args.format == "json":
        print(json.dumps(record, indent=1))
    else:
        print(f"torsor     {record['torsor']}")
        for row in record["gram"]:
            print("  [" + ", ".join(row) + "]")
        for k, v in record["invariants"].items():
            print(f"{k:10} {v}")
        print(f"w1 product formula: {'pass' if record['w1_product_formula'] else 'FAIL'}")
    return 0


def _run_one(task):
    name, seed, max_rank, max_group_order, corpus_path = task
    if corpus_path:
        from .harness import set_corpus

        set_corpus(load_corpus(corpus_path))
    return run_suites(name, seed, max_rank, max_group_order)


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise InputError(f"unknown suite {args.suite!r}; choose from {SUITES}")
    if args.corpus:
        from .harness import set_corpus

        set_corpus(load_corpus(args.corpus))
    if args.suite == "all" and args.jobs > 1:
        parts = ["arith", "quadform", "clifford", "etale", "ramify"]
        tasks = [(p, args.seed, args.max_rank, args.max_group_order, args.corpus) for p in parts]
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = [r for batch in pool.map(_run_one, tasks) for r in batch]
    else:
        reports = run_suites(args.suite, args.seed, args.max_rank, args.max_group_order)
    reports.sort(key=lambda r: r.suite)
    ok = all(r.passed for r in reports)
    if args.format == "json":
        print(json.dumps({"passed": ok, "reports": [r.to_dict() for r in reports]}, indent=1))
    else:
        for r in reports:
            status = "pass" if r.passed else "FAIL"
            print(f"{r.suite:18} {r.count:4d} checks  {status}  {r.seconds:7.2f}s")
            for c in r.failures():
                print(f"  FAIL {c.label}  {c.detail}")
        print("all suites passed" if ok else "FAILURES present")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="symtwist", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="invariants of a rational form file")
    p_inv.add_argument("form", help="path to a form JSON file")
    p_inv.add_argument("--format", choices=("json", "table"), default="table")
    p_inv.set_defaults(func=cmd_invariants)

    p_tw = sub.add_parser("twist", help="twist a form by a corpus torsor")
    p_tw.add_argument("form", help="path to a form JSON file")
    p_tw.add_argument("rep", help="path to a representation JSON file")
    p_tw.add_argument("torsor", help="corpus torsor label, e.g. sqrt5")
    p_tw.add_argument("--corpus", default=None, help="alternative corpus JSON path")
    p_tw.add_argument("--format", choices=("json", "table"), default="table")
    p_tw.set_defaults(func=cmd_twist)

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("--suite", default="all", help=f"one of {', '.join(SUITES)}")
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--jobs", type=int, default=1)
    p_ver.add_argument("--max-rank", type=int, default=6)
    p_ver.add_argument("--max-group-order", type=int, default=12)
    p_ver.add_argument("--corpus", default=None, help="alternative corpus JSON path")
    p_ver.add_argument("--format", choices=("json", "table"), default="table")
    p_ver.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
