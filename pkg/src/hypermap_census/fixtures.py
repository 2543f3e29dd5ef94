"""Reading and writing census tables in the fixed-width text layout.

The layout mirrors how the reference tables are printed: one line per key

       d   v   e   f   <count>

in blocks of equal dart count ordered by descending face count then
ascending vertex count, each block followed by a blank line, a

       d         sum   <total>

line and another blank line.  Fixture files use exactly this shape (they can
be produced by copy-paste), so rendered output and fixtures are comparable
after whitespace normalization.  A leading column-header line is tolerated
and skipped by the parser.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path

from .core import CountTable, faces_from_key


class FixtureFormatError(ValueError):
    """A fixture line that is neither a row, a sum row, nor a header."""


@dataclass(frozen=True)
class FixtureRow:
    darts: int
    vertices: int
    hyperedges: int
    faces: int
    count: int


@dataclass(frozen=True)
class FixtureSum:
    darts: int
    total: int


def parse_table(text: str, source: str = "<string>"):
    """Parse fixture text into (rows, sums); errors name the source and line."""
    rows: list[FixtureRow] = []
    sums: list[FixtureSum] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens:
            continue
        if "sum" in tokens:
            if len(tokens) != 3 or tokens[1] != "sum":
                raise FixtureFormatError(f"{source}:{lineno}: malformed sum row {line!r}")
            try:
                sums.append(FixtureSum(int(tokens[0]), int(tokens[2])))
            except ValueError:
                raise FixtureFormatError(f"{source}:{lineno}: malformed sum row {line!r}")
            continue
        numeric = [tok.lstrip("-").isdigit() for tok in tokens]
        if not any(numeric):
            continue  # column header
        if not all(numeric):
            raise FixtureFormatError(f"{source}:{lineno}: unparseable row {line!r}")
        if len(tokens) != 5:
            raise FixtureFormatError(f"{source}:{lineno}: expected 5 columns, got {line!r}")
        d, v, e, f, h = (int(tok) for tok in tokens)
        rows.append(FixtureRow(d, v, e, f, h))
    return rows, sums


def table_rows(table: CountTable, genus: int):
    """Rows of one genus in display order: by darts, then faces descending,
    then vertices ascending."""
    rows = []
    for (g, t, v, e), count in table.items():
        if g != genus:
            continue
        rows.append(FixtureRow(t, v, e, faces_from_key(g, t, v, e), count))
    rows.sort(key=lambda r: (r.darts, -r.faces, r.vertices))
    return rows


def render_table(table: CountTable, genus: int, count_header: str = "h") -> str:
    """Fixed-width text for one genus, matching the fixture layout."""
    rows = table_rows(table, genus)
    lines = [f"{'d':>4}{'v':>4}{'e':>4}{'f':>4}   {count_header}"]
    darts = sorted({r.darts for r in rows})
    for d in darts:
        block = [r for r in rows if r.darts == d]
        for r in block:
            lines.append(f"{r.darts:4d}{r.vertices:4d}{r.hyperedges:4d}{r.faces:4d}   {r.count}")
        lines.append("")
        lines.append(f"{d:4d}{'sum':>12}   {sum(r.count for r in block)}")
        lines.append("")
    return "\n".join(lines).rstrip() + "\n"


def render_json(table: CountTable, genus: int) -> str:
    """JSON rows; counts are decimal strings since they exceed 64-bit range."""
    out = []
    for r in table_rows(table, genus):
        out.append({
            "genus": genus,
            "darts": r.darts,
            "vertices": r.vertices,
            "hyperedges": r.hyperedges,
            "faces": r.faces,
            "count": str(r.count),
        })
    return json.dumps(out, indent=2)


_FIXTURE_NAME = re.compile(r"^(rooted|unrooted)-g(\d+)\.txt$")


def discover_fixtures(directory: str | Path):
    """Yield (kind, genus, path) for fixture files named <kind>-g<genus>.txt."""
    found = []
    for path in sorted(Path(directory).iterdir()):
        m = _FIXTURE_NAME.match(path.name)
        if m:
            found.append((m.group(1), int(m.group(2)), path))
    return found
