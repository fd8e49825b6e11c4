"""Command-line front end: ``ivfgraph <command> ...``.

Exit codes: 0 success (a ``false`` verdict is still success), 2 parse or
usage error, 3 invalid graph. ``--json`` prints one JSON object instead of
the human-readable lines.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence, TextIO

from .graph import (ComplementError, GraphValidationError, closed_degree, complement,
                    open_degree, order, random_graph, size)
from .interval import to_rational
from .io import ParseError, format_rational, read_graph, serialize_graph
from .irregularity import classify
from .metric import INF, distance_matrix
from .morphisms import LAWS, MorphismMode, find_morphism, isometric_from, isometric_mutual, \
    verify_relation_laws

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVALID = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _num(q) -> Optional[str]:
    """JSON encoding of a rational; ``None`` marks an infinite distance."""
    if q == INF:
        return None
    return format_rational(q)


def _text(q) -> str:
    return "inf" if q == INF else format_rational(q)


def _pair(a, b) -> str:
    return f"({_text(a)}, {_text(b)})"


def _bool(v: bool) -> str:
    return "true" if v else "false"


def _cmd_validate(args, out):
    g = read_graph(args.file)
    if args.json:
        return {"valid": True, "name": g.name, "vertices": len(g), "edges": len(g.edges)}
    print(f"valid: {g.name} ({len(g)} vertices, {len(g.edges)} edges)", file=out)


def _cmd_stats(args, out):
    g = read_graph(args.file)
    o, s = order(g), size(g)
    if args.json:
        return {"name": g.name, "order": _num(o), "size": _num(s)}
    print(f"order={_text(o)} size={_text(s)}", file=out)


def _cmd_degrees(args, out):
    g = read_graph(args.file)
    rows = []
    for v in g.vertices:
        d, c = open_degree(g, v), closed_degree(g, v)
        rows.append((v, d, c))
    if args.json:
        return {"degrees": {v: {"open": [_num(d.mu), _num(d.nu)],
                                "closed": [_num(c.mu), _num(c.nu)]} for v, d, c in rows}}
    for v, d, c in rows:
        print(f"{v} open={_pair(d.mu, d.nu)} closed={_pair(c.mu, c.nu)}", file=out)


def _cmd_distances(args, out):
    g = read_graph(args.file)
    m = distance_matrix(g)
    vs = g.vertices
    if args.json:
        return {"vertices": list(vs),
                "lower": [[_num(m[u, v].lower) for v in vs] for u in vs],
                "upper": [[_num(m[u, v].upper) for v in vs] for u in vs]}
    for u in vs:
        for v in vs:
            d = m[u, v]
            print(f"{u} {v} lower={_text(d.lower)} upper={_text(d.upper)}", file=out)


def _cmd_classify(args, out):
    report = classify(read_graph(args.file)).as_dict()
    if args.json:
        return report
    for key, value in report.items():
        print(f"{key}={_bool(value)}", file=out)


def _cmd_complement(args, out):
    c = complement(read_graph(args.file))
    if args.json:
        return {"document": serialize_graph(c)}
    out.write(serialize_graph(c))


def _cmd_isomorphic(args, out):
    g1, g2 = read_graph(args.file1), read_graph(args.file2)
    mode = MorphismMode.parse(args.mode)
    mapping = find_morphism(g1, g2, mode)
    if args.json:
        return {"mode": mode.value, "verdict": mapping is not None, "mapping": mapping}
    print(_bool(mapping is not None), file=out)
    if mapping is not None:
        print("mapping " + " ".join(f"{x}->{y}" for x, y in mapping.items()), file=out)


def _cmd_isometric(args, out):
    g1, g2 = read_graph(args.file1), read_graph(args.file2)
    if args.direction == "mutual":
        verdict = isometric_mutual(g1, g2)
        if args.json:
            return {"direction": "mutual", "verdict": verdict}
        print(_bool(verdict), file=out)
        return
    result = isometric_from(g1, g2)
    if args.json:
        return {"direction": "from", "verdict": result.holds,
                "witnesses": {v: {"anchor": a, "bijection": m}
                              for v, (a, m) in result.witnesses.items()}}
    print(_bool(result.holds), file=out)
    for v, (a, m) in result.witnesses.items():
        print(f"anchor {v}->{a}: " + " ".join(f"{x}->{y}" for x, y in m.items()), file=out)


def _cmd_laws(args, out):
    report = verify_relation_laws(args.seed, args.trials)
    if args.json:
        return {"ok": report.ok, "checks": {law: report.checks[law] for law in LAWS},
                "violations": [{"law": l, "where": w, "detail": d}
                               for l, w, d in report.violations]}
    for law in LAWS:
        bad = sum(1 for l, _, _ in report.violations if l == law)
        print(f"{law}: checks={report.checks[law]} violations={bad}", file=out)
    for law, where, detail in report.violations:
        print(f"VIOLATION {law} at {where} {detail}".rstrip(), file=out)
    print(f"ok={_bool(report.ok)}", file=out)


def _cmd_gen(args, out):
    g = random_graph(args.vertices, args.density, args.grid, args.seed)
    if args.json:
        return {"document": serialize_graph(g)}
    out.write(serialize_graph(g))


def _density(text: str) -> Fraction:
    try:
        return to_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid density {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")

    parser = _Parser(prog="ivfgraph", parents=[common],
                     description="Analyse interval-valued fuzzy graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_, files=1):
        p = sub.add_parser(name, parents=[common], help=help_)
        if files == 1:
            p.add_argument("file")
        elif files == 2:
            p.add_argument("file1")
            p.add_argument("file2")
        p.set_defaults(func=func)
        return p

    add("validate", _cmd_validate, "check a graph file")
    add("stats", _cmd_stats, "order and size")
    add("degrees", _cmd_degrees, "open and closed neighbourhood degrees")
    add("distances", _cmd_distances, "all-pairs lower/upper distances")
    add("classify", _cmd_classify, "irregularity flags")
    add("complement", _cmd_complement, "print the complement graph")
    p = add("isomorphic", _cmd_isomorphic, "search for an isomorphism", files=2)
    p.add_argument("--mode", choices=["iso", "weak", "coweak"], default="iso")
    p = add("isometric", _cmd_isometric, "decide isometry", files=2)
    p.add_argument("--direction", choices=["from", "mutual"], default="from")
    p = add("laws", _cmd_laws, "check equivalence-relation laws on random graphs", files=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p = add("gen", _cmd_gen, "generate a random graph", files=0)
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--density", type=_density, default=Fraction(1, 2))
    p.add_argument("--grid", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    return parser


def run_cli(argv: Sequence[str], stdout: Optional[TextIO] = None,
            stderr: Optional[TextIO] = None) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except _UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    args.json = getattr(args, "json", False)
    if getattr(args, "trials", 1) < 1 or getattr(args, "vertices", 0) < 0 \
            or getattr(args, "grid", 1) < 1:
        print("ivfgraph: error: counts must be positive", file=err)
        return EXIT_USAGE
    if hasattr(args, "density") and not 0 <= args.density <= 1:
        print("ivfgraph: error: density must lie in [0, 1]", file=err)
        return EXIT_USAGE
    try:
        payload = args.func(args, out)
    except (ParseError, OSError) as exc:
        print(f"ivfgraph: {exc}", file=err)
        return EXIT_USAGE
    except (GraphValidationError, ComplementError) as exc:
        problems = getattr(exc, "problems", None) or [str(exc)]
        for p in problems:
            print(f"ivfgraph: invalid graph: {p}", file=err)
        return EXIT_INVALID
    if args.json:
        json.dump(payload, out, sort_keys=True)
        out.write("\n")
    return EXIT_OK


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
