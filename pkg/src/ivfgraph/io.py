"""Line-oriented text format for interval-valued fuzzy graphs.

::

    # comment
    graph <name>
    vertex <id> <mu_lo> <mu_hi>
    edge <id1> <id2> <mu_lo> <mu_hi>

Numbers are decimal literals or ``p/q`` rationals and are read exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from .graph import GraphValidationError, IvfGraph, build_graph


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


def format_rational(q: Fraction) -> str:
    """Shortest exact decimal for ``q`` when one exists, otherwise ``p/q``."""
    q = Fraction(q)
    den = q.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{q.numerator}/{q.denominator}"
    places = max(twos, fives)
    if places == 0:
        return str(q.numerator)
    scaled = q.numerator * 10 ** places // q.denominator
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}".rstrip("0").rstrip(".")


def _number(token: str, line: int, column: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"invalid number {token!r}", line, column) from None


def _tokens(raw: str) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", raw)]


def parse_graph(text: Union[str, bytes]) -> IvfGraph:
    """Parse a graph document and validate it.

    Raises :class:`ParseError` for syntax problems and
    :class:`GraphValidationError` when the data breaks the graph axioms.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8: {exc.reason}", 1) from None

    name = None
    vertices, edges = [], []
    declared: dict[str, int] = {}
    unknown: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        toks = _tokens(body)
        if not toks:
            continue
        keyword, kcol = toks[0]
        if name is None:
            if keyword != "graph":
                raise ParseError("expected 'graph <name>' header", lineno, kcol)
            if len(toks) != 2:
                raise ParseError("header takes exactly one name", lineno, kcol)
            name = toks[1][0]
            continue
        if keyword == "vertex":
            if len(toks) != 4:
                raise ParseError("expected 'vertex <id> <lo> <hi>'", lineno, kcol)
            (vid, _), (lo, lcol), (hi, hcol) = toks[1:]
            vertices.append((vid, (_number(lo, lineno, lcol), _number(hi, lineno, hcol))))
            declared.setdefault(vid, lineno)
        elif keyword == "edge":
            if len(toks) != 5:
                raise ParseError("expected 'edge <id1> <id2> <lo> <hi>'", lineno, kcol)
            (x, _), (y, _), (lo, lcol), (hi, hcol) = toks[1:]
            for end in (x, y):
                if end not in declared:
                    unknown.append(f"line {lineno}: edge {x} {y} references unknown vertex {end}")
            edges.append((x, y, (_number(lo, lineno, lcol), _number(hi, lineno, hcol))))
        elif keyword == "graph":
            raise ParseError("duplicate 'graph' header", lineno, kcol)
        else:
            raise ParseError(f"unknown directive {keyword!r}", lineno, kcol)

    if name is None:
        raise ParseError("missing 'graph <name>' header", 1)
    try:
        return build_graph(vertices, edges, name=name)
    except GraphValidationError as exc:
        if unknown:
            # replace the position-less messages with line-aware ones
            rest = [p for p in exc.problems if "unknown endpoint" not in p]
            raise GraphValidationError(unknown + rest) from None
        raise


def serialize_graph(g: IvfGraph) -> str:
    lines = [f"graph {g.name}"]
    for v in g.vertices:
        a = g.vertex_membership[v]
        lines.append(f"vertex {v} {format_rational(a.lo)} {format_rational(a.hi)}")
    for (x, y), b in g.edges.items():
        lines.append(f"edge {x} {y} {format_rational(b.lo)} {format_rational(b.hi)}")
    return "\n".join(lines) + "\n"


def read_graph(path) -> IvfGraph:
    with open(path, "rb") as fh:
        return parse_graph(fh.read())


def write_graph(g: IvfGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_graph(g))
