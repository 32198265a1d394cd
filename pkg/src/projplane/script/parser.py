"""Parser and static checker for construction scripts.

One statement per line::

    point A = (1, 0, 0)
    line l = [0, 0, 1]
    line m = join(A, B)
    conic k = conic5(U, V, A, B, C)
    assert collinear(X, Y, Z)
    emit svg "out.svg" chart=z viewport=-5:5,-5:5 samples=200
    print D

Names are single-assignment and must be bound before use.  Every call is
checked against the operation table at parse time, so a script that parses
can only fail at run time on a geometric precondition.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Union

KINDS = ("point", "line", "conic", "proj", "points")

# op -> (argument kinds, result kind)
OPS: dict[str, tuple[tuple[str, ...], str]] = {
    "join": (("point", "point"), "line"),
    "meet": (("line", "line"), "point"),
    "harmonic": (("point",) * 3, "point"),
    "projectivity3": (("point",) * 6, "proj"),
    "apply": (("proj", "point"), "point"),
    "axis": (("proj",), "line"),
    "conic5": (("point",) * 5, "conic"),
    "tangent": (("conic", "point"), "line"),
    "second": (("conic", "point", "line"), "point"),
    "pascal": (("conic",) + ("point",) * 6, "line"),
    "sixth": (("point",) * 5 + ("line",), "point"),
    "polar": (("point", "conic"), "line"),
    "pole": (("line", "conic"), "point"),
    "trace": (("conic", "int"), "points"),
}

# predicate -> accepted argument signatures
PREDICATES: dict[str, tuple[tuple[str, ...], ...]] = {
    "collinear": (("point",) * 3,),
    "concurrent": (("line",) * 3,),
    "incident": (("point", "line"),),
    "outside": (("point", "line"),),
    "apart": (("point", "point"), ("line", "line")),
    "equal": (("point", "point"), ("line", "line"), ("proj", "proj")),
    "on": (("point", "conic"),),
    "harmonic": (("point",) * 4,),
}

CHARTS = ("x", "y", "z")
DEFAULT_VIEWPORT = (Fraction(-5), Fraction(5), Fraction(-5), Fraction(5))
DEFAULT_SAMPLES = 200


class ParseError(Exception):
    """A syntax or static error at ``line``:``column``."""

    def __init__(self, message: str, line: int, column: int, expected: Iterable[str] = ()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = frozenset(expected)
        text = f"{line}:{column}: {message}"
        if self.expected:
            text += f" (expected {', '.join(sorted(self.expected))})"
        super().__init__(text)


class UnboundName(ParseError):
    pass


class Rebind(ParseError):
    pass


@dataclass(frozen=True)
class Pos:
    line: int
    column: int


_NOPOS = Pos(0, 0)


@dataclass(frozen=True)
class Name:
    name: str
    pos: Pos = field(default=_NOPOS, compare=False)


@dataclass(frozen=True)
class IntLit:
    value: int
    pos: Pos = field(default=_NOPOS, compare=False)


@dataclass(frozen=True)
class Call:
    op: str
    args: tuple["Expr", ...]
    pos: Pos = field(default=_NOPOS, compare=False)


Expr = Union[Name, IntLit, Call]


@dataclass(frozen=True)
class Declare:
    kind: str
    name: str
    coords: tuple[Fraction, Fraction, Fraction]
    pos: Pos = field(default=_NOPOS, compare=False)


@dataclass(frozen=True)
class Construct:
    kind: str
    name: str
    expr: Call
    pos: Pos = field(default=_NOPOS, compare=False)


@dataclass(frozen=True)
class Assert:
    predicate: str
    args: tuple[Expr, ...]
    pos: Pos = field(default=_NOPOS, compare=False)


@dataclass(frozen=True)
class Emit:
    target: str
    path: str
    chart: str = "z"
    viewport: tuple[Fraction, Fraction, Fraction, Fraction] = DEFAULT_VIEWPORT
    samples: int = DEFAULT_SAMPLES
    pos: Pos = field(default=_NOPOS, compare=False)


@dataclass(frozen=True)
class Print:
    expr: Expr
    pos: Pos = field(default=_NOPOS, compare=False)


Statement = Union[Declare, Construct, Assert, Emit, Print]


@dataclass(frozen=True)
class Script:
    statements: tuple[Statement, ...]

    def __len__(self) -> int:
        return len(self.statements)


# --- tokens ----------------------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>\#.*)
  | (?P<number>-?\d+(?:/\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9']*)
  | (?P<string>"[^"\n]*")
  | (?P<punct>[()\[\],=:])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize_line(text: str, lineno: int) -> list[Token]:
    out: list[Token] = []
    i = 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if m is None:
            raise ParseError(f"unexpected character {text[i]!r}", lineno, i + 1)
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            out.append(Token(kind, m.group(), lineno, i + 1))
        i = m.end()
    out.append(Token("eol", "", lineno, len(text) + 1))
    return out


# --- parser ----------------------------------------------------------------

class _Line:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.i]

    def next(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, expected: Iterable[str] = ()) -> ParseError:
        tok = self.peek
        found = tok.text or "end of line"
        return ParseError(f"{message}, found {found!r}", tok.line, tok.column, expected)

    def expect(self, text: str) -> Token:
        if self.peek.text != text or self.peek.kind == "string":
            raise self.fail(f"expected {text!r}", {repr(text)})
        return self.next()

    def expect_kind(self, kind: str, what: str) -> Token:
        if self.peek.kind != kind:
            raise self.fail(f"expected {what}", {what})
        return self.next()

    def end(self) -> None:
        if self.peek.kind != "eol":
            raise self.fail("expected end of statement", {"end of line"})


def _pos(tok: Token) -> Pos:
    return Pos(tok.line, tok.column)


def _number(ln: _Line) -> Fraction:
    tok = ln.expect_kind("number", "number")
    try:
        return Fraction(tok.text)
    except ZeroDivisionError:
        raise ParseError("zero denominator", tok.line, tok.column) from None


def _interval(ln: _Line) -> tuple[Fraction, Fraction]:
    lo = _number(ln)
    ln.expect(":")
    return lo, _number(ln)


class Parser:
    def __init__(self):
        self.env: dict[str, tuple[str, Pos]] = {}

    def parse(self, text: str) -> Script:
        stmts = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            ln = _Line(tokenize_line(raw, lineno))
            if ln.peek.kind == "eol":
                continue
            stmts.append(self.statement(ln))
        return Script(tuple(stmts))

    def statement(self, ln: _Line) -> Statement:
        head = ln.peek
        if head.kind == "name" and head.text in KINDS:
            return self.binding(ln)
        if head.kind == "name" and head.text == "assert":
            return self.assertion(ln)
        if head.kind == "name" and head.text == "emit":
            return self.emit(ln)
        if head.kind == "name" and head.text == "print":
            ln.next()
            expr, _ = self.expr(ln)
            ln.end()
            return Print(expr, _pos(head))
        raise ln.fail("expected a statement", {*KINDS, "assert", "emit", "print"})

    def binding(self, ln: _Line) -> Statement:
        kind_tok = ln.next()
        kind = kind_tok.text
        name_tok = ln.expect_kind("name", "name")
        name = name_tok.text
        if name in self.env:
            first = self.env[name][1]
            raise Rebind(
                f"{name!r} is already bound at line {first.line}", name_tok.line, name_tok.column
            )
        ln.expect("=")
        opener = {"point": "(", "line": "["}.get(kind)
        if opener and ln.peek.text == opener:
            ln.next()
            coords = [_number(ln)]
            for _ in range(2):
                ln.expect(",")
                coords.append(_number(ln))
            ln.expect(")" if opener == "(" else "]")
            ln.end()
            stmt: Statement = Declare(kind, name, tuple(coords), _pos(kind_tok))
        else:
            if ln.peek.kind != "name":
                raise ln.fail("expected a construction", {opener} if opener else {"operation"})
            expr, result = self.expr(ln)
            if not isinstance(expr, Call):
                raise ParseError("a binding needs a literal or an operation", expr.pos.line, expr.pos.column)
            if result != kind:
                raise ParseError(
                    f"{expr.op} yields a {result}, not a {kind}", expr.pos.line, expr.pos.column, {kind}
                )
            ln.end()
            stmt = Construct(kind, name, expr, _pos(kind_tok))
        self.env[name] = (kind, _pos(name_tok))
        return stmt

    def expr(self, ln: _Line) -> tuple[Expr, str]:
        tok = ln.peek
        if tok.kind == "number":
            ln.next()
            if "/" in tok.text or int(tok.text) < 1:
                raise ParseError("expected a positive integer", tok.line, tok.column, {"count"})
            return IntLit(int(tok.text), _pos(tok)), "int"
        if tok.kind != "name":
            raise ln.fail("expected a name or an operation", {"name", "operation"})
        ln.next()
        if ln.peek.text != "(":
            if tok.text not in self.env:
                raise UnboundName(f"{tok.text!r} is not bound", tok.line, tok.column)
            return Name(tok.text, _pos(tok)), self.env[tok.text][0]
        if tok.text not in OPS:
            raise ParseError(f"unknown operation {tok.text!r}", tok.line, tok.column, OPS)
        kinds, result = OPS[tok.text]
        args = self.args(ln, tok.text, (kinds,))
        return Call(tok.text, args, _pos(tok)), result

    def args(self, ln: _Line, what: str, signatures: tuple[tuple[str, ...], ...]) -> tuple[Expr, ...]:
        open_tok = ln.expect("(")
        items: list[tuple[Expr, str]] = []
        if ln.peek.text != ")":
            items.append(self.expr(ln))
            while ln.peek.text == ",":
                ln.next()
                items.append(self.expr(ln))
        ln.expect(")")
        got = tuple(k for _, k in items)
        if got in signatures:
            return tuple(e for e, _ in items)
        arities = {len(s) for s in signatures}
        if len(got) not in arities:
            n = " or ".join(str(a) for a in sorted(arities))
            raise ParseError(
                f"{what} takes {n} arguments, got {len(got)}", open_tok.line, open_tok.column
            )
        for sig in signatures:
            if len(sig) != len(got):
                continue
            for (e, k), want in zip(items, sig):
                if k != want:
                    raise ParseError(
                        f"argument of {what} must be a {want}, got a {k}",
                        e.pos.line, e.pos.column, {want},
                    )
        raise AssertionError("unreachable")

    def assertion(self, ln: _Line) -> Assert:
        head = ln.next()
        tok = ln.expect_kind("name", "predicate")
        if tok.text not in PREDICATES:
            raise ParseError(f"unknown predicate {tok.text!r}", tok.line, tok.column, PREDICATES)
        args = self.args(ln, tok.text, PREDICATES[tok.text])
        ln.end()
        return Assert(tok.text, args, _pos(head))

    def emit(self, ln: _Line) -> Emit:
        head = ln.next()
        target = ln.peek
        if target.text != "svg":
            raise ln.fail("expected an emit target", {"svg"})
        ln.next()
        path = ln.expect_kind("string", "quoted path").text[1:-1]
        if not path:
            raise ParseError("empty path", head.line, head.column)
        opts: dict = {}
        while ln.peek.kind == "name":
            key = ln.next()
            if key.text in opts:
                raise ParseError(f"option {key.text!r} given twice", key.line, key.column)
            ln.expect("=")
            if key.text == "chart":
                val = ln.expect_kind("name", "chart axis")
                if val.text not in CHARTS:
                    raise ParseError(f"unknown chart {val.text!r}", val.line, val.column, CHARTS)
                opts["chart"] = val.text
            elif key.text == "viewport":
                vp_tok = ln.peek
                x0, x1 = _interval(ln)
                ln.expect(",")
                y0, y1 = _interval(ln)
                if not (x0 < x1 and y0 < y1):
                    raise ParseError("viewport must have min < max on both axes", vp_tok.line, vp_tok.column)
                opts["viewport"] = (x0, x1, y0, y1)
            elif key.text == "samples":
                val = ln.expect_kind("number", "sample count")
                if "/" in val.text or int(val.text) < 2:
                    raise ParseError("samples must be an integer >= 2", val.line, val.column)
                opts["samples"] = int(val.text)
            else:
                raise ParseError(
                    f"unknown option {key.text!r}", key.line, key.column, {"chart", "viewport", "samples"}
                )
        ln.end()
        return Emit("svg", path, pos=_pos(head), **opts)


def parse(text: str) -> Script:
    return Parser().parse(text)


# --- pretty-printer ----------------------------------------------------------

def _num(x: Fraction) -> str:
    return str(x)


def format_expr(e: Expr) -> str:
    if isinstance(e, Name):
        return e.name
    if isinstance(e, IntLit):
        return str(e.value)
    return f"{e.op}({', '.join(format_expr(a) for a in e.args)})"


def format_statement(s: Statement) -> str:
    if isinstance(s, Declare):
        body = ", ".join(_num(c) for c in s.coords)
        return f"{s.kind} {s.name} = ({body})" if s.kind == "point" else f"{s.kind} {s.name} = [{body}]"
    if isinstance(s, Construct):
        return f"{s.kind} {s.name} = {format_expr(s.expr)}"
    if isinstance(s, Assert):
        return f"assert {s.predicate}({', '.join(format_expr(a) for a in s.args)})"
    if isinstance(s, Emit):
        x0, x1, y0, y1 = (_num(v) for v in s.viewport)
        return (
            f'emit {s.target} "{s.path}" chart={s.chart} '
            f"viewport={x0}:{x1},{y0}:{y1} samples={s.samples}"
        )
    return f"print {format_expr(s.expr)}"


def format_script(script: Script) -> str:
    return "".join(format_statement(s) + "\n" for s in script.statements)
