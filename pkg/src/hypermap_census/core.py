"""Shared exact-arithmetic plumbing: key validation and sparse count tables.

Every count in this package is a plain Python ``int`` (arbitrary precision,
never negative once stored) and every key is a tuple of small integers tied
together by an Euler-type genus relation:

* hypermaps:  v + e + f = t + 2*(1 - g)   (t darts, v vertices, e hyperedges,
  f faces, genus g)
* ordinary maps:  v - e + f = 2*(1 - g)   (e edges)

A :class:`CountTable` stores strictly positive counts keyed by
``(g, t, v, e)``; the face count is always derived from the genus relation
and never stored, so an inconsistent key simply cannot be represented.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class CensusError(Exception):
    """Base class for all errors raised by this package."""


class InexactDivisionError(CensusError):
    """An integer division that must be exact left a remainder."""


class NegativeCoefficientError(CensusError):
    """A quantity that counts something came out negative."""


class NotFilledError(CensusError, KeyError):
    """A lookup went beyond the range a table was filled for."""


EMPTY_HYPERMAP_KEY = (0, 0, 1, 0, 1)  # (g, t, v, e, f)


def faces_from_key(g: int, t: int, v: int, e: int) -> int:
    """Face count forced by the genus relation; <= 0 means "no such hypermap"."""
    return t + 2 * (1 - g) - v - e


def validate_hypermap_key(g: int, t: int, v: int, e: int, f: int) -> bool:
    """True iff (g,t,v,e,f) satisfies the hypermap genus relation.

    The empty hypermap (0,0,1,0,1) is the only valid key with t = 0.
    """
    if min(g, t, v, e, f) < 0:
        return False
    if v + e + f != t + 2 * (1 - g):
        return False
    if v < 1 or f < 1:
        return False
    if t == 0:
        return (g, t, v, e, f) == EMPTY_HYPERMAP_KEY
    return True


def validate_map_key(g: int, edges: int, v: int, f: int) -> bool:
    """True iff (g,edges,v,f) satisfies the Euler relation for ordinary maps."""
    if min(g, edges, v, f) < 0 or v < 1 or f < 1:
        return False
    return v - edges + f == 2 * (1 - g)


@dataclass
class CountTable:
    """Sparse association (g, t, v, e) -> positive count, plus engine metadata.

    Zero counts are never stored; :meth:`count` returns 0 for absent keys.
    Construction is single-writer: call :meth:`add` (or ``accumulate``) until
    done, then :meth:`freeze`; a frozen table only serves reads.
    """

    engine: str
    max_genus: int
    max_darts: int
    _data: dict = field(default_factory=dict)
    _frozen: bool = False

    def add(self, g: int, t: int, v: int, e: int, count: int) -> None:
        if self._frozen:
            raise CensusError("count table is frozen")
        if count < 0:
            raise NegativeCoefficientError(f"count {count} at {(g, t, v, e)}")
        if count == 0:
            return
        f = faces_from_key(g, t, v, e)
        if not validate_hypermap_key(g, t, v, e, f):
            raise CensusError(f"invalid key (g={g}, t={t}, v={v}, e={e})")
        key = (g, t, v, e)
        self._data[key] = self._data.get(key, 0) + count

    def freeze(self) -> "CountTable":
        self._frozen = True
        return self

    def count(self, g: int, t: int, v: int, e: int, f: int | None = None) -> int:
        """Count at a key; 0 when absent or when f contradicts the genus relation."""
        if f is not None and f != faces_from_key(g, t, v, e):
            return 0
        return self._data.get((g, t, v, e), 0)

    def total(self, g: int, t: int) -> int:
        return sum(c for (gg, tt, _, _), c in self._data.items() if gg == g and tt == t)

    def keys(self):
        """All stored (g, t, v, e) keys (unordered)."""
        return self._data.keys()

    def items(self):
        return self._data.items()

    def __len__(self) -> int:
        return len(self._data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CountTable):
            return NotImplemented
        return self._data == other._data
