from .interpreter import Report, ScriptError, run
from .parser import ParseError, Rebind, Script, UnboundName, format_script, parse
from .svg import Chart, render_svg

__all__ = [
    "Chart",
    "ParseError",
    "Rebind",
    "Report",
    "Script",
    "ScriptError",
    "UnboundName",
    "format_script",
    "parse",
    "render_svg",
    "run",
]
