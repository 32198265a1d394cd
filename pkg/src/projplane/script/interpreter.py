"""Run a parsed script against the kernel and collect a report."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

from .. import conic as cn
from .. import projectivity as pj
from ..core import Line, Point, apart, incident, join, meet, outside
from ..errors import GeometryError
from ..harmonic import harmonic_conjugate, is_harmonic_set
from ..linalg import det3
from .parser import Assert, Construct, Declare, Emit, IntLit, Name, Pos, Print, Script, format_expr
from .svg import Chart, emit_svg

EXIT_OK, EXIT_ASSERT, EXIT_KERNEL, EXIT_PARSE = 0, 1, 2, 3

OPERATIONS: dict[str, Callable[..., Any]] = {
    "join": join,
    "meet": meet,
    "harmonic": harmonic_conjugate,
    "projectivity3": lambda a, b, c, a2, b2, c2: pj.from_three_points((a, b, c), (a2, b2, c2)),
    "apply": pj.apply,
    "axis": pj.axis_of_homology,
    "conic5": cn.conic_through_five,
    "tangent": cn.tangent_at,
    "second": cn.second_intersection,
    "pascal": lambda k, *hexagon: cn.pascal_line(k, hexagon),
    "sixth": cn.sixth_point,
    "polar": cn.polar,
    "pole": cn.pole,
    "trace": cn.trace,
}


def _equal(a, b) -> bool:
    if isinstance(a, pj.RangeProjectivity):
        return pj.equal(a, b)
    return a == b


PREDICATES: dict[str, Callable[..., bool]] = {
    "collinear": lambda p, q, r: det3((p.v, q.v, r.v)) == 0,
    "concurrent": lambda l, m, n: det3((l.v, m.v, n.v)) == 0,
    "incident": incident,
    "outside": outside,
    "apart": apart,
    "equal": _equal,
    "on": lambda p, k: cn.contains(k, p),
    "harmonic": is_harmonic_set,
}


def describe(value: Any) -> str:
    if isinstance(value, (Point, Line)):
        return str(value)
    if isinstance(value, cn.Conic):
        return f"conic(U={value.U}, V={value.V})"
    if isinstance(value, pj.RangeProjectivity):
        rows = "; ".join(" ".join(str(x) for x in r) for r in value.matrix)
        return f"proj {value.domain} -> {value.codomain} [{rows}]"
    if isinstance(value, list):
        return "[" + ", ".join(str(p) for p in value) + "]"
    return str(value)


def _coords(value: Any) -> Any:
    if isinstance(value, (Point, Line)):
        return list(value.v)
    if isinstance(value, list):
        return [list(p.v) for p in value]
    if isinstance(value, pj.RangeProjectivity):
        return [list(r) for r in value.matrix]
    if isinstance(value, cn.Conic):
        return value.to_dict()["points"]
    return None


class ScriptError(Exception):
    """A kernel error raised while running the statement at ``pos``."""

    def __init__(self, pos: Pos, error: Exception, subject: str = ""):
        self.pos = pos
        self.error = error
        self.subject = subject
        super().__init__(f"{pos.line}:{pos.column}: {type(error).__name__}: {error}")


@dataclass
class Binding:
    name: str
    kind: str
    value: Any
    line: int


@dataclass
class AssertionOutcome:
    line: int
    text: str
    passed: bool


@dataclass
class Report:
    bindings: list[Binding] = field(default_factory=list)
    assertions: list[AssertionOutcome] = field(default_factory=list)
    prints: list[tuple[int, str]] = field(default_factory=list)
    emitted: list[dict] = field(default_factory=list)
    errors: list[ScriptError] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        if self.errors:
            return EXIT_KERNEL
        if not all(a.passed for a in self.assertions):
            return EXIT_ASSERT
        return EXIT_OK

    @property
    def ok(self) -> bool:
        return self.exit_code == EXIT_OK

    def value(self, name: str) -> Any:
        return next(b.value for b in self.bindings if b.name == name)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "exit_code": self.exit_code,
            "bindings": [
                {"name": b.name, "kind": b.kind, "line": b.line, "value": describe(b.value),
                 "coords": _coords(b.value)}
                for b in self.bindings
            ],
            "assertions": [{"line": a.line, "text": a.text, "passed": a.passed} for a in self.assertions],
            "prints": [{"line": n, "text": t} for n, t in self.prints],
            "emitted": self.emitted,
            "errors": [
                {"line": e.pos.line, "column": e.pos.column, "error": type(e.error).__name__,
                 "message": str(e.error)}
                for e in self.errors
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        out = [text for _, text in self.prints]
        for a in self.assertions:
            out.append(f"{'PASS' if a.passed else 'FAIL'} line {a.line}: assert {a.text}")
        for e in self.emitted:
            line = f"emitted {e['path']}: {e['points']} points, {e['lines']} lines, {e['conics']} conics"
            if e["at_infinity"]:
                line += f"; at infinity: {', '.join(e['at_infinity'])}"
            if e["outside_viewport"]:
                line += f"; outside viewport: {', '.join(e['outside_viewport'])}"
            out.append(line)
        for err in self.errors:
            out.append(f"error {err}")
        passed = sum(a.passed for a in self.assertions)
        out.append(f"{passed}/{len(self.assertions)} assertions passed, {len(self.errors)} errors")
        return "\n".join(out) + "\n"


class Interpreter:
    def __init__(self, base_dir: Path | str = ".", keep_going: bool = False, emit_only: bool = False):
        self.base_dir = Path(base_dir)
        self.keep_going = keep_going
        self.emit_only = emit_only
        self.env: dict[str, Any] = {}
        self.report = Report()

    def eval(self, e, stmt_pos: Pos) -> Any:
        if isinstance(e, Name):
            if e.name not in self.env:
                # bound statically but its own construction failed earlier
                raise ScriptError(e.pos, LookupError(f"{e.name} has no value"), e.name)
            return self.env[e.name]
        if isinstance(e, IntLit):
            return e.value
        args = [self.eval(a, stmt_pos) for a in e.args]
        try:
            return OPERATIONS[e.op](*args)
        except GeometryError as exc:
            raise ScriptError(e.pos, exc, format_expr(e)) from exc

    def execute(self, stmt) -> None:
        if isinstance(stmt, Declare):
            try:
                value = Point(*stmt.coords) if stmt.kind == "point" else Line(*stmt.coords)
            except GeometryError as exc:
                raise ScriptError(stmt.pos, exc, stmt.name) from exc
            self._bind(stmt.name, stmt.kind, value, stmt.pos)
        elif isinstance(stmt, Construct):
            self._bind(stmt.name, stmt.kind, self.eval(stmt.expr, stmt.pos), stmt.pos)
        elif isinstance(stmt, Assert):
            if self.emit_only:
                return
            args = [self.eval(a, stmt.pos) for a in stmt.args]
            try:
                passed = bool(PREDICATES[stmt.predicate](*args))
            except GeometryError as exc:
                raise ScriptError(stmt.pos, exc, stmt.predicate) from exc
            text = f"{stmt.predicate}({', '.join(format_expr(a) for a in stmt.args)})"
            self.report.assertions.append(AssertionOutcome(stmt.pos.line, text, passed))
        elif isinstance(stmt, Print):
            if self.emit_only:
                return
            value = self.eval(stmt.expr, stmt.pos)
            label = format_expr(stmt.expr)
            self.report.prints.append((stmt.pos.line, f"{label} = {describe(value)}"))
        elif isinstance(stmt, Emit):
            chart = Chart(stmt.chart, stmt.viewport, stmt.samples)
            target = self.base_dir / stmt.path
            items = [(b.name, b.value) for b in self.report.bindings]
            try:
                res = emit_svg(items, chart, target)
            except OSError as exc:
                raise ScriptError(stmt.pos, exc, stmt.path) from exc
            res.path = stmt.path
            self.report.emitted.append(res.to_dict())

    def _bind(self, name: str, kind: str, value: Any, pos: Pos) -> None:
        self.env[name] = value
        self.report.bindings.append(Binding(name, kind, value, pos.line))

    def run(self, script: Script) -> Report:
        for stmt in script.statements:
            try:
                self.execute(stmt)
            except ScriptError as err:
                self.report.errors.append(err)
                if not self.keep_going:
                    break
        return self.report


def run(script: Script, base_dir: Path | str = ".", keep_going: bool = False, emit_only: bool = False) -> Report:
    return Interpreter(base_dir, keep_going, emit_only).run(script)
