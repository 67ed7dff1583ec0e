"""Command-line front end.

Machine-readable output is JSON (or an edge list) on stdout; one-line human
summaries go to stderr. Exit status: 0 decided/ok, 1 decided/negative,
2 input error, 3 capability bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .construct import build_model
from .digraph import format_edge_list, is_reflexive, loopless_vertices, parse_edge_list, random_digraph
from .errors import (
    BoundExceededError,
    EdgeListError,
    IntervalNestError,
    InvariantError,
    ModelFormatError,
    NotNestModelError,
    NotNestOrderingError,
    NotReflexiveError,
    OrderingError,
)
from .model import (
    extract_ordering,
    format_rational,
    loads_model,
    model_to_json,
    perturb_positive,
    realizes,
    shape_of,
    SHAPE_FLAGS,
)
from .ordering import (
    CLASS_NAMES,
    catalog,
    check_nest_ordering,
    check_pattern_free,
    normalize_class_name,
    parse_order,
)
from .recognize import census, classify, find_separating_example, is_interval_nest

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3

CLASS_CHOICES = [c.replace("_", "-") for c in CLASS_NAMES]


class _InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _InputError(message)


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _InputError("cannot read %s: %s" % (path, exc.strerror or exc)) from None


def _emit(obj, out):
    out.write(json.dumps(obj, sort_keys=True) + "\n")


def _note(msg):
    sys.stderr.write(msg + "\n")


def _load_digraph(path):
    return parse_edge_list(_read(path))


def _load_order(d, text):
    order = parse_order(text)
    if order.n != d.n:
        raise OrderingError("order lists %d vertices but the digraph has %d" % (order.n, d.n))
    return order


def cmd_check_ordering(args, out):
    d = _load_digraph(args.edgelist)
    order = _load_order(d, args.order)
    cls = normalize_class_name(args.cls)
    if cls == "nest":
        if is_reflexive(d):
            report = check_nest_ordering(d, order).to_json()
        else:
            report = {"ok": False, "violations": [{"rule": "reflexive", "witness": [v]}
                                                  for v in loopless_vertices(d)]}
    else:
        report = check_pattern_free(d, order, catalog(cls)).to_json()
    report["class"] = cls.replace("_", "-")
    _emit(report, out)
    _note("%s ordering %s: %s" % (report["class"], args.order,
                                  "ok" if report["ok"] else "%d violations" % len(report["violations"])))
    return EXIT_OK if report["ok"] else EXIT_NEGATIVE


def cmd_build_model(args, out):
    d = _load_digraph(args.edgelist)
    order = _load_order(d, args.order)
    try:
        model = build_model(d, order)
    except NotNestOrderingError as exc:
        _emit({"error": "ordering is not a nest ordering", "report": exc.report.to_json()}, out)
        _note("refused: ordering is not a nest ordering")
        return EXIT_NEGATIVE
    except NotReflexiveError as exc:
        _emit({"error": "digraph is not reflexive", "loopless_vertices": list(exc.missing)}, out)
        _note("refused: digraph is not reflexive")
        return EXIT_NEGATIVE
    _emit(model_to_json(model), out)
    _note("built nest model on %d vertices" % d.n)
    return EXIT_OK


def cmd_verify_model(args, out):
    model = loads_model(_read(args.model))
    d = _load_digraph(args.against)
    if model.n != d.n:
        raise _InputError("model has %d vertices but the digraph has %d" % (model.n, d.n))
    report = realizes(model, d).to_json()
    shapes = shape_of(model)
    report["shape"] = [f for f in SHAPE_FLAGS if f in shapes]
    report["positive_length"] = model.positive_length
    _emit(report, out)
    _note("model %s the digraph" % ("realizes" if report["ok"] else "does not realize"))
    return EXIT_OK if report["ok"] else EXIT_NEGATIVE


def cmd_extract_ordering(args, out):
    model = loads_model(_read(args.model))
    try:
        order, points = extract_ordering(model)
    except NotNestModelError as exc:
        _emit({"error": str(exc)}, out)
        _note("refused: model is not nest")
        return EXIT_NEGATIVE
    _emit({
        "ordering": list(order.labels),
        "points": [format_rational(points[v]) for v in range(1, model.n + 1)],
        "perturbed_model": model_to_json(perturb_positive(model)),
    }, out)
    _note("extracted ordering %s" % ",".join(map(str, order.labels)))
    return EXIT_OK


def cmd_recognize(args, out):
    cert = is_interval_nest(_load_digraph(args.edgelist))
    _emit(cert.to_json(), out)
    _note("verdict: %s" % cert.verdict)
    return EXIT_OK


def cmd_classify(args, out):
    report = classify(_load_digraph(args.edgelist))
    _emit(report.to_json(), out)
    _note("admitted: %s" % ", ".join(c for c in CLASS_NAMES if report.admitted[c]) or "none")
    return EXIT_OK


def cmd_census(args, out):
    result = census(args.n, args.reflexive)
    _emit(result.to_json(), out)
    width = max(map(len, CLASS_NAMES))
    _note("%d digraphs on %d vertices%s" % (result.total, args.n,
                                           " (reflexive)" if args.reflexive else ""))
    for name in CLASS_NAMES:
        _note("  %-*s %d" % (width, name.replace("_", "-"), result.counts[name]))
    _note("  nest oracles agree on %d / %d" % (result.nest_agreement, result.total))
    return EXIT_OK


def cmd_gen(args, out):
    d = random_digraph(args.n, args.p, args.seed, args.reflexive)
    out.write(format_edge_list(d))
    return EXIT_OK


def cmd_separate(args, out):
    d = find_separating_example(args.src, args.dst, args.n)
    if d is None:
        out.write("none\n")
        _note("no digraph on %d vertices separates %s from %s" % (args.n, args.src, args.dst))
    else:
        out.write(format_edge_list(d))
    return EXIT_OK


def _probability(text):
    try:
        p = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError("not a number: %r" % text) from None
    if not 0.0 <= p <= 1.0:
        raise argparse.ArgumentTypeError("probability must lie in [0, 1]")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="intervalnest", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check-ordering", help="check an ordering against a class")
    p.add_argument("edgelist")
    p.add_argument("--order", required=True)
    p.add_argument("--class", dest="cls", choices=CLASS_CHOICES, default="nest")
    p.set_defaults(func=cmd_check_ordering)

    p = sub.add_parser("build-model", help="nest interval model from a nest ordering")
    p.add_argument("edgelist")
    p.add_argument("--order", required=True)
    p.set_defaults(func=cmd_build_model)

    p = sub.add_parser("verify-model", help="check that a model realizes a digraph")
    p.add_argument("model")
    p.add_argument("--against", required=True)
    p.set_defaults(func=cmd_verify_model)

    p = sub.add_parser("extract-ordering", help="nest ordering from a nest model")
    p.add_argument("model")
    p.set_defaults(func=cmd_extract_ordering)

    p = sub.add_parser("recognize", help="decide interval-nest membership with a certificate")
    p.add_argument("edgelist")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("classify", help="test every class catalog")
    p.add_argument("edgelist")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("census", help="class counts over all digraphs on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--reflexive", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("gen", help="seeded random digraph as an edge list")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=_probability, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--reflexive", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("separate", help="smallest digraph in one class but not another")
    p.add_argument("--from", dest="src", choices=CLASS_CHOICES, required=True)
    p.add_argument("--to", dest="dst", choices=CLASS_CHOICES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_separate)
    return parser


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "n", 0) is not None and getattr(args, "n", 0) < 0:
            raise _InputError("--n must be non-negative")
        return args.func(args, out)
    except InvariantError:
        raise
    except BoundExceededError as exc:
        _note("error: %s" % exc)
        return EXIT_BOUND
    except (_InputError, EdgeListError, ModelFormatError, OrderingError, IntervalNestError) as exc:
        _note("error: %s" % exc)
        return EXIT_INPUT


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
