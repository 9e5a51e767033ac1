"""Symbols and symbol tables.

A table fixes the variable order used by every polynomial built on it.
Display names such as ``x[-3]`` or ``f[-6]`` round-trip through
:meth:`SymbolTable.index`.  The flint context uses neutral internal
names so that display names never have to be valid flint identifiers.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

import flint

_INDEXED = re.compile(r"^([A-Za-z_]\w*)\[(-?\d+)\]$")


@dataclass(frozen=True, order=True)
class Symbol:
    id: int
    name: str

    def __str__(self):
        return self.name


def indexed_name(stem: str, i: int) -> str:
    return f"{stem}[{i}]"


def parse_name(name: str):
    """Split ``'x[-3]'`` into ``('x', -3)``; plain names give ``(name, None)``."""
    m = _INDEXED.match(name)
    if m:
        return m.group(1), int(m.group(2))
    return name, None


@lru_cache(maxsize=None)
def _context(n: int):
    return flint.fmpz_mpoly_ctx.get(tuple(f"v{i}" for i in range(n)), "lex")


class SymbolTable:
    """An ordered, immutable collection of distinct symbol names."""

    __slots__ = ("names", "_ids", "ctx")

    def __init__(self, names):
        names = tuple(str(n) for n in names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate symbol names")
        if not names:
            raise ValueError("a symbol table needs at least one symbol")
        self.names = names
        self._ids = {n: i for i, n in enumerate(names)}
        self.ctx = _context(len(names))

    @classmethod
    def indexed(cls, stem, indices, extra=()):
        """Build a table like ``x[-3], x[-2], x[-1], a, b``."""
        return cls([indexed_name(stem, i) for i in indices] + list(extra))

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.symbols())

    def __contains__(self, name):
        return name in self._ids

    def __eq__(self, other):
        return isinstance(other, SymbolTable) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"SymbolTable({list(self.names)!r})"

    def symbols(self):
        return [Symbol(i, n) for i, n in enumerate(self.names)]

    def symbol(self, key) -> Symbol:
        i = self.index(key)
        return Symbol(i, self.names[i])

    def index(self, key) -> int:
        """Resolve a Symbol, id or name to an id."""
        if isinstance(key, Symbol):
            if self.names[key.id] != key.name:
                raise KeyError(key)
            return key.id
        if isinstance(key, int):
            if not 0 <= key < len(self.names):
                raise KeyError(key)
            return key
        try:
            return self._ids[key]
        except KeyError:
            raise KeyError(f"unknown symbol {key!r}") from None

    def indices(self, keys):
        return sorted({self.index(k) for k in keys})
