"""``pg``: run or check construction scripts.

Exit status: 0 all assertions pass, 1 an assertion failed, 2 a kernel or
I/O error, 3 a parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .interpreter import EXIT_KERNEL, EXIT_OK, EXIT_PARSE, run
from .parser import ParseError, Script, parse


def _load(path: str, fmt: str) -> tuple[Optional[Script], int]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"pg: cannot read {path}: {exc.strerror}", file=sys.stderr)
        return None, EXIT_KERNEL
    try:
        return parse(text), EXIT_OK
    except ParseError as exc:
        if fmt == "json":
            print(json.dumps({
                "ok": False,
                "exit_code": EXIT_PARSE,
                "parse_error": {
                    "line": exc.line,
                    "column": exc.column,
                    "error": type(exc).__name__,
                    "message": exc.message,
                    "expected": sorted(exc.expected),
                },
            }, indent=2))
        else:
            print(f"{path}:{exc}", file=sys.stderr)
        return None, EXIT_PARSE


def cmd_run(args: argparse.Namespace) -> int:
    script, code = _load(args.script, args.format)
    if script is None:
        return code
    report = run(
        script,
        base_dir=Path(args.script).resolve().parent,
        keep_going=args.keep_going,
        emit_only=args.emit_only,
    )
    if args.format == "json":
        print(report.to_json())
    else:
        sys.stdout.write(report.to_text())
    return report.exit_code


def cmd_check(args: argparse.Namespace) -> int:
    script, code = _load(args.script, "text")
    if script is None:
        return code
    print(f"{args.script}: ok, {len(script)} statements")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pg", description="Exact projective-plane construction scripts.")
    sub = parser.add_subparsers(dest="command", required=True)
    p_run = sub.add_parser("run", help="run a script and report bindings and assertions")
    p_run.add_argument("script")
    p_run.add_argument("--emit-only", action="store_true", help="build and emit; skip asserts and prints")
    p_run.add_argument("--keep-going", action="store_true", help="continue after a kernel error")
    p_run.add_argument("--format", choices=("text", "json"), default="text")
    p_run.set_defaults(func=cmd_run)
    p_check = sub.add_parser("check", help="parse and statically check a script")
    p_check.add_argument("script")
    p_check.set_defaults(func=cmd_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
