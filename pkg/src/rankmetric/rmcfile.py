"""The ``.rmc`` code file format.

A restricted key/value text format::

    # the [4,2,2] example over F_16
    p = 2
    e = 1
    m = 4
    modulus = "z^4+z+1"
    generator = [
      ["0", "1", "z^5", "0"],
      ["1", "0", "0", "z^5"],
    ]

``#`` starts a comment.  ``modulus`` is optional (default: least monic
irreducible).  Generator entries use the element grammar of
:meth:`FieldTower.parse`.  An optional ``notation`` key is recorded but does
not change parsing.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass
from pathlib import Path

from .code import RankCode
from .errors import ParseError, RankMetricError
from .field import FieldTower, make_field

KEYS = ("p", "e", "m", "modulus", "generator", "notation")


@dataclass(frozen=True)
class CodeFile:
    p: int
    e: int
    m: int
    modulus: str | None
    generator: tuple[tuple[str, ...], ...]
    notation: str | None = None

    def tower(self) -> FieldTower:
        try:
            return make_field(self.p, self.e, self.m, self.modulus)
        except RankMetricError as exc:
            raise ParseError(f"bad field description: {exc}") from exc

    def to_code(self, allow_long: bool = False) -> RankCode:
        tw = self.tower()
        try:
            G = [[tw.parse(x) for x in row] for row in self.generator]
            return RankCode(tw, G, allow_long=allow_long)
        except RankMetricError as exc:
            raise ParseError(f"bad generator: {exc}") from exc

    @classmethod
    def from_code(cls, C: RankCode, notation: str | None = None) -> "CodeFile":
        tw = C.tower
        return cls(tw.p, tw.e, tw.m, tw.modulus_str(), tuple(tuple(r) for r in C.format_generator()), notation)

    def dumps(self) -> str:
        lines = [f"p = {self.p}", f"e = {self.e}", f"m = {self.m}"]
        if self.modulus is not None:
            lines.append(f'modulus = "{self.modulus}"')
        if self.notation is not None:
            lines.append(f'notation = "{self.notation}"')
        lines.append("generator = [")
        for row in self.generator:
            lines.append("  [" + ", ".join(f'"{x}"' for x in row) + "],")
        lines.append("]")
        return "\n".join(lines) + "\n"


def _strip_comment(line: str) -> str:
    out = []
    quote = None
    for ch in line:
        if quote:
            if ch == quote:
                quote = None
        elif ch in "\"'":
            quote = ch
        elif ch == "#":
            break
        out.append(ch)
    return "".join(out)


def _split_entries(text: str) -> dict[str, str]:
    entries: dict[str, str] = {}
    key = None
    buf: list[str] = []
    depth = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        if key is None:
            if "=" not in line:
                raise ParseError(f"line {lineno}: expected 'key = value'")
            k, v = (s.strip() for s in line.split("=", 1))
            if k not in KEYS:
                raise ParseError(f"line {lineno}: unknown key {k!r}")
            if k in entries:
                raise ParseError(f"line {lineno}: duplicate key {k!r}")
            key, buf, depth = k, [v], 0
        else:
            buf.append(line)
        depth = sum(s.count("[") - s.count("]") for s in buf)
        if depth < 0:
            raise ParseError(f"line {lineno}: unbalanced ']'")
        if depth == 0:
            entries[key] = "\n".join(buf)
            key = None
    if key is not None:
        raise ParseError(f"unterminated value for {key!r}")
    return entries


def _scalar(value: str) -> str:
    v = value.strip()
    if len(v) >= 2 and v[0] == v[-1] and v[0] in "\"'":
        return v[1:-1]
    return v


def _int(entries: dict[str, str], key: str, default: int | None = None) -> int:
    if key not in entries:
        if default is None:
            raise ParseError(f"missing key {key!r}")
        return default
    try:
        return int(_scalar(entries[key]))
    except ValueError as exc:
        raise ParseError(f"{key} must be an integer") from exc


def parse_rmc(text: str) -> CodeFile:
    entries = _split_entries(text)
    p = _int(entries, "p")
    e = _int(entries, "e", 1)
    m = _int(entries, "m")
    if "generator" not in entries:
        raise ParseError("missing key 'generator'")
    try:
        gen = ast.literal_eval(entries["generator"])
    except (ValueError, SyntaxError) as exc:
        raise ParseError(f"generator is not a list of rows: {exc}") from exc
    if not isinstance(gen, (list, tuple)) or not gen:
        raise ParseError("generator must be a non-empty list of rows")
    rows = []
    for row in gen:
        if not isinstance(row, (list, tuple)) or not row:
            raise ParseError("each generator row must be a non-empty list")
        if not all(isinstance(x, (str, int)) for x in row):
            raise ParseError("generator entries must be element strings")
        rows.append(tuple(str(x) for x in row))
    if len({len(r) for r in rows}) != 1:
        raise ParseError("generator rows have different lengths")
    modulus = _scalar(entries["modulus"]) if "modulus" in entries else None
    notation = _scalar(entries["notation"]) if "notation" in entries else None
    return CodeFile(p, e, m, modulus, tuple(rows), notation)


def load_code_file(path: str | Path) -> CodeFile:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse_rmc(text)


def load_code(path: str | Path, allow_long: bool = False) -> RankCode:
    return load_code_file(path).to_code(allow_long)


def save_code(C: RankCode, path: str | Path) -> None:
    Path(path).write_text(CodeFile.from_code(C).dumps())
