"""Reading and writing ``.ideal`` files.

Layout (UTF-8, LF line endings)::

    ring: x y z
    char: 0
    gens:
    x^2 - y
    x^3 - z

Every nonblank line after ``gens:`` is one polynomial.  A file either parses
completely or is rejected with a line/column diagnostic.
"""
from __future__ import annotations

import re
from importlib import resources
from pathlib import Path
from typing import Optional, Union

from .errors import ParseError
from .groebner import Ideal
from .poly import RingContext, parse

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def _header(lines, index, label):
    if index >= len(lines):
        raise ParseError(f"missing '{label}:' line", line=index + 1)
    text = lines[index]
    prefix = f"{label}:"
    if not text.startswith(prefix):
        raise ParseError(f"expected '{prefix}'", line=index + 1, column=1)
    return text[len(prefix):]


def parse_ideal_file(text: str) -> Ideal:
    lines = text.split("\n")
    names = _header(lines, 0, "ring").split()
    if not names:
        raise ParseError("ring line lists no variables", line=1)
    col = len("ring:") + 1
    for name in names:
        col = lines[0].index(name, col - 1) + 1
        if not _IDENT.match(name):
            raise ParseError(f"invalid variable name {name!r}", line=1, column=col)
    if len(set(names)) != len(names):
        raise ParseError("duplicate variable names", line=1)
    char = _header(lines, 1, "char").strip()
    if char != "0":
        raise ParseError(f"only characteristic 0 is supported, got {char!r}", line=2)
    rest = _header(lines, 2, "gens")
    if rest.strip():
        raise ParseError("'gens:' must be alone on its line", line=3, column=6)
    ctx = RingContext(tuple(names))
    gens = []
    for k in range(3, len(lines)):
        if not lines[k].strip():
            continue
        try:
            gens.append(parse(lines[k], ctx))
        except ParseError as exc:
            raise ParseError(exc.message, line=k + 1, column=exc.column) from None
    return Ideal(ctx, gens)


def read_ideal(path: Union[str, Path]) -> Ideal:
    return parse_ideal_file(Path(path).read_text(encoding="utf-8"))


def format_ideal_file(I: Ideal) -> str:
    lines = ["ring: " + " ".join(I.ctx.names), "char: 0", "gens:"]
    lines += [str(g) for g in I.generators]
    return "\n".join(lines) + "\n"


BUNDLED = ("patty", "es", "conca", "twisted-cubic", "minors-2x3")
_data_dir: Optional[Path] = None


def set_data_dir(path: Union[str, Path, None]):
    """Read bundled examples from ``path`` instead of the package data."""
    global _data_dir
    _data_dir = None if path is None else Path(path)


def bundled_path(name: str) -> Path:
    """Path of a bundled example (``patty``, ``es``, ``conca``, ``twisted-cubic``, ``minors-2x3``)."""
    if not name.endswith(".ideal"):
        name += ".ideal"
    if _data_dir is not None:
        return _data_dir / name
    return Path(str(resources.files("gdc") / "data" / name))


def bundled(name: str) -> Ideal:
    return read_ideal(bundled_path(name))
