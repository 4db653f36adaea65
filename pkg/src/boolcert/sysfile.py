"""Text format for whole systems.

    # comment
    vars: 3
    e01 : x0*x1
    size: x0 + x1 + x2 - 2
"""

from __future__ import annotations

import re
from pathlib import Path

from .errors import ParseError
from .ring import format_poly, parse
from .symmetry import PolySystem

_HEADER = re.compile(r"^\s*vars\s*:\s*(\d+)\s*$")
_LINE = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_.]*)\s*:(.*)$")


def parse_system(text: str) -> PolySystem:
    n = None
    polys = []
    names = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if n is None:
            m = _HEADER.match(line)
            if not m:
                raise ParseError("expected header 'vars: N'", line=lineno)
            n = int(m.group(1))
            if n < 1:
                raise ParseError("vars must be at least 1", line=lineno)
            continue
        m = _LINE.match(line)
        if not m:
            raise ParseError("expected 'name : polynomial'", line=lineno)
        name, body = m.group(1), m.group(2)
        if name in names:
            raise ParseError(f"duplicate polynomial name {name!r}", line=lineno)
        names.add(name)
        try:
            f = parse(body, n)
        except ParseError as exc:
            # report the column within the whole line
            col = None if exc.position is None else exc.position + m.start(2)
            exc.line = lineno
            exc.position = col
            exc.args = (f"{exc.message} (line {lineno}" + (f", col {col})" if col is not None else ")"),)
            raise
        polys.append((name, f))
    if n is None:
        raise ParseError("missing header 'vars: N'")
    if not polys:
        raise ParseError("system has no polynomials")
    return PolySystem(n, tuple(polys))


def format_system(f_sys: PolySystem) -> str:
    lines = [f"vars: {f_sys.ambient_n}"]
    lines += [f"{name} : {format_poly(f)}" for name, f in f_sys.polys]
    return "\n".join(lines) + "\n"


def read_system(path) -> PolySystem:
    return parse_system(Path(path).read_text(encoding="utf-8"))


def write_system(f_sys: PolySystem, path) -> None:
    Path(path).write_text(format_system(f_sys), encoding="utf-8")
