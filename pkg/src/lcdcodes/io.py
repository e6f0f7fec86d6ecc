"""Matrix text, table emission and the JSON-lines result cache."""

from __future__ import annotations

import csv
import io
import json
import logging
import os
from dataclasses import dataclass
from typing import Iterable

from .codes import LinearCode, is_lcd, min_distance
from .errors import MatrixParseError
from .gf2 import BitWord, Gf2Matrix

__all__ = [
    "METHODS",
    "TableEntry",
    "parse_matrix",
    "render_matrix",
    "format_table",
    "load_cache",
    "append_cache",
]

log = logging.getLogger(__name__)

METHODS = ("formula", "profile", "exhaustive", "pairs", "construction")


def parse_matrix(text: str) -> Gf2Matrix:
    """Parse one row per line of '0'/'1' characters.

    Surrounding whitespace on a line is ignored, as are trailing blank lines.
    """
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise MatrixParseError("empty matrix")
    rows = []
    width = None
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            raise MatrixParseError("blank row", lineno)
        bad = next((ch for ch in line if ch not in "01"), None)
        if bad is not None:
            raise MatrixParseError(f"illegal character {bad!r}", lineno)
        if width is None:
            width = len(line)
        elif len(line) != width:
            raise MatrixParseError(f"row has {len(line)} entries, expected {width}", lineno)
        rows.append(BitWord.from_string(line))
    return Gf2Matrix(tuple(rows), width)


def render_matrix(g: Gf2Matrix) -> str:
    return "".join(f"{row}\n" for row in g.rows)


@dataclass(frozen=True)
class TableEntry:
    n: int
    k: int
    d: int
    method: str
    witness: Gf2Matrix | None = None

    @property
    def key(self) -> tuple[int, int, str]:
        return (self.n, self.k, self.method)

    def to_json(self) -> dict:
        witness = None if self.witness is None else [str(r) for r in self.witness.rows]
        return {"n": self.n, "k": self.k, "d": self.d, "method": self.method, "witness": witness}

    @classmethod
    def from_json(cls, obj: dict) -> TableEntry:
        """Inverse of :meth:`to_json`; extra keys are ignored.

        A witness must be a full-rank ``k x n`` LCD generator of distance
        ``d``, otherwise ``ValueError`` is raised.
        """
        n, k, d, method = (obj[f] for f in ("n", "k", "d", "method"))
        if not all(isinstance(x, int) for x in (n, k, d)) or method not in METHODS:
            raise ValueError(f"bad field types or method in {obj!r}")
        witness = obj.get("witness")
        if witness is not None:
            g = parse_matrix("\n".join(witness))
            if g.shape != (k, n):
                raise ValueError(f"witness shape {g.shape} != ({k}, {n})")
            code = LinearCode(g)
            if not is_lcd(code) or min_distance(code) != d:
                raise ValueError("witness is not an LCD code of the stated distance")
            witness = g
        return cls(n, k, d, method, witness)


def format_table(entries: Iterable[TableEntry], fmt: str = "text") -> str:
    entries = list(entries)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "k", "d", "method"])
        for e in entries:
            writer.writerow([e.n, e.k, e.d, e.method])
        return buf.getvalue()
    if fmt == "json":
        return json.dumps([e.to_json() for e in entries], indent=2) + "\n"
    if fmt == "text":
        return "".join(f"LCD[{e.n},{e.k}] = {e.d}  ({e.method})\n" for e in entries)
    raise ValueError(f"unknown table format {fmt!r}")


def load_cache(path) -> dict[tuple[int, int, str], TableEntry]:
    """Read a cache file, keeping the first entry for each (n, k, method).

    A missing file is an empty cache.  Corrupt lines are logged and skipped.
    """
    table: dict[tuple[int, int, str], TableEntry] = {}
    if not os.path.exists(path):
        return table
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                entry = TableEntry.from_json(json.loads(line))
            except (ValueError, KeyError, TypeError) as exc:
                log.warning("%s:%d: skipping corrupt cache line (%s)", path, lineno, exc)
                continue
            table.setdefault(entry.key, entry)
    return table


def append_cache(path, entry: TableEntry) -> None:
    # One write() on an O_APPEND handle, so each record lands whole.
    line = json.dumps(entry.to_json(), separators=(",", ":")) + "\n"
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(line)
        fh.flush()
