"""On-disk cache for computed count tables.

Format: a line-oriented text file, chosen over binary for diff-ability.

    # hypermap-census cache v1
    # engine=kz genus=3 max-darts=14
    g d v e count
    ...

Counts are decimal big integers.  Writes are atomic (temp file in the same
directory, then rename).  The cache directory is ``$HYPERMAP_CACHE_DIR`` if
set, else ``~/.cache/hypermap-census``.
"""

from __future__ import annotations

import os
import tempfile
from pathlib import Path

from .core import CountTable

FORMAT_VERSION = 1
_MAGIC = f"# hypermap-census cache v{FORMAT_VERSION}"


def cache_dir() -> Path:
    env = os.environ.get("HYPERMAP_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "hypermap-census"


def table_path(engine: str, genus: int, max_darts: int) -> Path:
    return cache_dir() / f"{engine}-g{genus}-d{max_darts}.counts"


def save_table(table: CountTable, genus: int, path: Path | None = None) -> Path:
    if path is None:
        path = table_path(table.engine, genus, table.max_darts)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [_MAGIC,
             f"# engine={table.engine} genus={genus} max-darts={table.max_darts}"]
    for (g, t, v, e), count in sorted(table.items()):
        lines.append(f"{g} {t} {v} {e} {count}")
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write("\n".join(lines) + "\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def read_header(path: Path) -> dict | None:
    """The header fields of a cache file, or None if it is not one of ours."""
    try:
        with open(path) as fh:
            magic = fh.readline().rstrip("\n")
            meta = fh.readline().rstrip("\n")
    except OSError:
        return None
    if magic != _MAGIC or not meta.startswith("# "):
        return None
    fields = {}
    for part in meta[2:].split():
        key, _, value = part.partition("=")
        fields[key] = value
    if not {"engine", "genus", "max-darts"} <= fields.keys():
        return None
    return fields


def load_table(path: Path) -> CountTable | None:
    header = read_header(path)
    if header is None:
        return None
    genus = int(header["genus"])
    table = CountTable(engine=header["engine"], max_genus=genus,
                       max_darts=int(header["max-darts"]))
    with open(path) as fh:
        for line in fh:
            if line.startswith("#"):
                continue
            g, t, v, e, count = line.split()
            table.add(int(g), int(t), int(v), int(e), int(count))
    return table.freeze()


def load_cached(engine: str, genus: int, max_darts: int) -> CountTable | None:
    path = table_path(engine, genus, max_darts)
    if not path.exists():
        return None
    return load_table(path)


def cache_entries():
    """Yield (path, header) for every cache file in the cache directory."""
    root = cache_dir()
    if not root.is_dir():
        return
    for path in sorted(root.iterdir()):
        header = read_header(path)
        if header is not None:
            yield path, header
