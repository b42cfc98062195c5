"""Text formats: scalar expressions, matrix documents and JSON results.

Scalar grammar (``^`` binds tighter than ``*``/``/``; unary minus takes the
whole following atom, so ``-a^2`` is ``(-a)^2``)::

    expr     := term (('*' | '/') term)*
    term     := atom ('^' exponent)?
    exponent := signed-integer | '(' signed-integer '/' natural ')'
    atom     := natural | identifier | 'i' | 'zeta(' natural ')'
              | '-' atom | '(' expr ')'

``i`` is ``zeta(4)``.  A fractional exponent takes the positive real root and
is only accepted on phase-free values.

Matrix documents::

    # comment
    n = 2
    q 0 1 = a
    q 0 2 = -1
    q 1 2 = zeta(3)*b^-1
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any, Iterable

from .errors import DuplicateEntry, IndexOutOfRange, MissingEntry, ParseError, ZeroScalar
from .matrix import QuantumMatrix
from .scalar import Symbol, UnitMonomial, from_rational, root_of_unity, symbol

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        while True:
            m = _TOKEN.match(text, pos)
            if m is None:
                break
            kind = ("num", "ident", "op")[m.lastindex - 1]
            self.toks.append((kind, m.group(m.lastindex), m.start(m.lastindex)))
            pos = m.end()
        self.toks.append(("end", "", len(text)))
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.toks[self.i]

    def next(self) -> tuple[str, str, int]:
        tok = self.toks[self.i]
        if tok[0] != "end":
            self.i += 1
        return tok

    def accept(self, op: str) -> bool:
        kind, val, _ = self.peek()
        if kind == "op" and val == op:
            self.i += 1
            return True
        return False

    def expect(self, op: str) -> None:
        kind, val, pos = self.peek()
        if not (kind == "op" and val == op):
            raise ParseError(f"expected {op!r}, found {_describe(kind, val)}", pos)
        self.i += 1

    def natural(self) -> tuple[int, int]:
        kind, val, pos = self.next()
        if kind != "num":
            raise ParseError(f"expected a natural number, found {_describe(kind, val)}", pos)
        return int(val), pos


def _describe(kind: str, val: str) -> str:
    return "end of input" if kind == "end" else repr(val)


def _expr(t: _Tokens) -> UnitMonomial:
    value = _term(t)
    while True:
        if t.accept("*"):
            value = value * _term(t)
        elif t.accept("/"):
            value = value / _term(t)
        else:
            return value


def _signed_int(t: _Tokens) -> int:
    sign = -1 if t.accept("-") else 1
    k, _ = t.natural()
    return sign * k


def _term(t: _Tokens) -> UnitMonomial:
    base = _atom(t)
    if not t.accept("^"):
        return base
    if t.accept("("):
        _, _, pos = t.peek()
        num = _signed_int(t)
        t.expect("/")
        den, den_pos = t.natural()
        if den == 0:
            raise ParseError("zero denominator in exponent", den_pos)
        t.expect(")")
        try:
            return base.real_power(Fraction(num, den))
        except ValueError as exc:
            raise ParseError(str(exc), pos) from None
    return base ** _signed_int(t)


def _atom(t: _Tokens) -> UnitMonomial:
    kind, val, pos = t.next()
    if kind == "num":
        k = int(val)
        if k == 0:
            raise ZeroScalar(f"literal zero at column {pos + 1}")
        return from_rational(k)
    if kind == "ident":
        if val == "i":
            return root_of_unity(4)
        if val == "zeta":
            t.expect("(")
            d, dpos = t.natural()
            if d == 0:
                raise ParseError("zeta(0) is undefined", dpos)
            t.expect(")")
            return root_of_unity(d)
        return symbol(val)
    if kind == "op" and val == "-":
        return _atom(t) * root_of_unity(2)
    if kind == "op" and val == "(":
        inner = _expr(t)
        t.expect(")")
        return inner
    raise ParseError(f"expected a scalar, found {_describe(kind, val)}", pos)


def parse_scalar(text: str) -> UnitMonomial:
    t = _Tokens(text)
    value = _expr(t)
    kind, val, pos = t.peek()
    if kind != "end":
        raise ParseError(f"unexpected {_describe(kind, val)}", pos)
    return value


def _format_power(base: str, e: Fraction) -> str:
    if e == 1:
        return base
    if e.denominator == 1:
        return f"{base}^{e.numerator}"
    return f"{base}^({e.numerator}/{e.denominator})"


def format_scalar(x: UnitMonomial) -> str:
    parts = []
    if x.phase == Fraction(1, 2):
        parts.append("-1")
    elif x.phase != 0:
        parts.append(_format_power(f"zeta({x.phase.denominator})", Fraction(x.phase.numerator)))
    for gen, e in x.exponents:
        name = gen.name if isinstance(gen, Symbol) else str(gen.p)
        parts.append(_format_power(name, e))
    return "*".join(parts) if parts else "1"


@dataclass
class MatrixDocument:
    """Upper-triangle entries of an ``(n+1) x (n+1)`` matrix, as expression text."""

    n: int
    entries: dict[tuple[int, int], str]


_N_LINE = re.compile(r"n\s*=\s*(\d+)\s*\Z")
_Q_LINE = re.compile(r"q\s+(\d+)\s+(\d+)\s*=\s*")


def parse_matrix_document(text: str) -> tuple[MatrixDocument, dict[tuple[int, int], tuple[int, int]]]:
    """Split a matrix file into its entries; also returns (line, column) of each expression."""
    n: int | None = None
    entries: dict[tuple[int, int], str] = {}
    where: dict[tuple[int, int], tuple[int, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        stripped = line.lstrip()
        if not stripped:
            continue
        indent = len(line) - len(stripped)
        if n is None:
            m = _N_LINE.match(stripped)
            if not m:
                raise ParseError("expected 'n = <natural>' before any entries", indent, lineno)
            n = int(m.group(1))
            continue
        m = _Q_LINE.match(stripped)
        if not m:
            if _N_LINE.match(stripped):
                raise ParseError("repeated 'n =' line", indent, lineno)
            raise ParseError("expected 'q <i> <j> = <expr>'", indent, lineno)
        i, j = int(m.group(1)), int(m.group(2))
        if i > n or j > n:
            raise IndexOutOfRange(f"entry q {i} {j} outside 0..{n} (line {lineno})")
        if i >= j:
            raise ParseError(f"only entries with i < j are accepted, got q {i} {j}", indent, lineno)
        if (i, j) in entries:
            raise DuplicateEntry(i, j)
        entries[i, j] = stripped[m.end():]
        where[i, j] = (lineno, indent + m.end())
    if n is None:
        raise ParseError("empty matrix document")
    for i, j in combinations(range(n + 1), 2):
        if (i, j) not in entries:
            raise MissingEntry(i, j)
    return MatrixDocument(n, entries), where


def parse_matrix_file(text: str) -> QuantumMatrix:
    doc, where = parse_matrix_document(text)
    upper = {}
    for ij, expr in doc.entries.items():
        lineno, col = where[ij]
        try:
            upper[ij] = parse_scalar(expr)
        except ParseError as exc:
            raise ParseError(exc.message, None if exc.pos is None else col + exc.pos, lineno) from None
        except ZeroScalar as exc:
            raise ZeroScalar(f"{exc} in q {ij[0]} {ij[1]} (line {lineno})") from None
    return QuantumMatrix.from_upper(doc.n, upper)


def format_matrix_file(Q: QuantumMatrix, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" if c else "#" for c in comments]
    lines.append(f"n = {Q.n}")
    lines.extend(f"q {i} {j} = {format_scalar(q)}" for (i, j), q in Q.upper().items())
    return "\n".join(lines) + "\n"


def variety_to_json(v, meta: dict[str, Any] | None = None) -> str:
    """Serialize a :class:`~qpoints.components.PointVariety` as one line of JSON."""
    doc: dict[str, Any] = {
        "n": v.n,
        "components": [list(c) for c in v.sorted_components()],
        "dimension": v.dimension,
        "is_full_space": v.is_full_space,
    }
    if meta is not None:
        doc["meta"] = meta
    return json.dumps(doc, sort_keys=False)
