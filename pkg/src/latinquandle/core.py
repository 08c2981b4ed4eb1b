"""Finite binary operations as dense tables, permutations, and table file I/O.

Elements are always 0..n-1. ``cells[x][y]`` is ``x*y``: the row is the left
operand. Permutations compose right-factor-first, ``compose(f, g)(x) ==
f(g(x))``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import ParseError, SizeMismatchError


class Permutation:
    """An immutable bijection on 0..n-1."""

    __slots__ = ("_map",)

    def __init__(self, images: Iterable[int]):
        m = tuple(int(v) for v in images)
        if sorted(m) != list(range(len(m))):
            raise ValueError(f"not a bijection on 0..{len(m) - 1}: {m}")
        self._map = m

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> Permutation:
        p = object.__new__(cls)
        p._map = images
        return p

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls._trusted(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self._map)

    @property
    def map(self) -> tuple[int, ...]:
        return self._map

    def __call__(self, x: int) -> int:
        return self._map[x]

    def __len__(self) -> int:
        return len(self._map)

    def __iter__(self) -> Iterator[int]:
        return iter(self._map)

    def __eq__(self, other) -> bool:
        if isinstance(other, Permutation):
            return self._map == other._map
        if isinstance(other, (list, tuple)):
            return list(self._map) == list(other)
        return NotImplemented

    def __lt__(self, other: Permutation) -> bool:
        return self._map < other._map

    def __hash__(self) -> int:
        return hash(self._map)

    def __repr__(self) -> str:
        return f"Permutation({list(self._map)})"

    def tolist(self) -> list[int]:
        return list(self._map)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self._map))

    def fixed_points(self) -> list[int]:
        return [i for i, v in enumerate(self._map) if v == i]

    def order(self) -> int:
        """Multiplicative order, the lcm of the cycle lengths."""
        seen = [False] * len(self._map)
        result = 1
        for start in range(len(self._map)):
            if seen[start]:
                continue
            length = 0
            x = start
            while not seen[x]:
                seen[x] = True
                x = self._map[x]
                length += 1
            result = math.lcm(result, length)
        return result


def compose(f: Permutation, g: Permutation) -> Permutation:
    """Return ``f o g``, i.e. apply ``g`` first."""
    if f.n != g.n:
        raise SizeMismatchError(f"cannot compose permutations of order {f.n} and {g.n}")
    fm = f.map
    return Permutation._trusted(tuple(fm[y] for y in g.map))


def invert(f: Permutation) -> Permutation:
    inv = [0] * f.n
    for x, y in enumerate(f.map):
        inv[y] = x
    return Permutation._trusted(tuple(inv))


class CayleyTable:
    """Immutable n x n operation table; ``cells[x, y] == x*y``."""

    __slots__ = ("_cells",)

    def __init__(self, cells):
        arr = np.array(cells, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise ValueError(f"table must be a non-empty square array, got shape {arr.shape}")
        n = arr.shape[0]
        if arr.min() < 0 or arr.max() >= n:
            raise ValueError(f"cell values must lie in 0..{n - 1}")
        arr.setflags(write=False)
        self._cells = arr

    @classmethod
    def from_function(cls, n: int, op) -> CayleyTable:
        return cls([[op(x, y) for y in range(n)] for x in range(n)])

    @property
    def n(self) -> int:
        return self._cells.shape[0]

    @property
    def cells(self) -> np.ndarray:
        """Read-only view of the table."""
        return self._cells

    def __call__(self, x: int, y: int) -> int:
        return int(self._cells[x, y])

    def tolist(self) -> list[list[int]]:
        return self._cells.tolist()

    def __eq__(self, other) -> bool:
        if not isinstance(other, CayleyTable):
            return NotImplemented
        return np.array_equal(self._cells, other._cells)

    def __hash__(self) -> int:
        return hash((self.n, self._cells.tobytes()))

    def __repr__(self) -> str:
        return f"CayleyTable(n={self.n}, {self.tolist()})"

    def transpose(self) -> CayleyTable:
        """The opposite operation, x*'y = y*x."""
        return CayleyTable(self._cells.T)

    def relabel(self, perm: Permutation | Sequence[int]) -> CayleyTable:
        """Isomorphic copy in which element x is renamed perm(x)."""
        p = np.asarray(list(perm), dtype=np.int64)
        if p.shape != (self.n,):
            raise SizeMismatchError(f"relabelling of order {len(p)} for a table of order {self.n}")
        out = np.empty_like(self._cells)
        out[np.ix_(p, p)] = p[self._cells]
        return CayleyTable(out)


@dataclass(frozen=True)
class TranslationFamily:
    """One kind of translation, ``members[i]`` being the map indexed by i."""

    kind: str  # left | right | left-middle | right-middle
    members: tuple[Permutation, ...]

    def __getitem__(self, i: int) -> Permutation:
        return self.members[i]

    def __len__(self) -> int:
        return len(self.members)


def _bijective_rows(a: np.ndarray) -> np.ndarray:
    n = a.shape[-1]
    return (np.sort(a, axis=-1) == np.arange(n)).all(axis=-1)


def is_latin(t: CayleyTable) -> bool:
    return bool(_bijective_rows(t.cells).all() and _bijective_rows(t.cells.T).all())


def serialize_table(t: CayleyTable) -> str:
    lines = [str(t.n)]
    lines.extend(" ".join(str(v) for v in row) for row in t.tolist())
    return "\n".join(lines) + "\n"


def parse_table(text: bytes | str) -> CayleyTable:
    """Parse the table file format.

    Line 1 holds n, the next n lines hold the rows as space separated
    integers. ``#`` lines and blank lines are skipped; LF and CRLF both work.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8: {exc}", 1) from None
    content = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        content.append((lineno, line))
    if not content:
        raise ParseError("missing header", 1)

    lineno, header = content[0]
    try:
        n = int(header)
    except ValueError:
        raise ParseError(f"bad header {header!r}, expected the order n", lineno) from None
    if n < 1:
        raise ParseError(f"order must be at least 1, got {n}", lineno)

    body = content[1:]
    if len(body) != n:
        where = body[n][0] if len(body) > n else (body[-1][0] if body else lineno)
        raise ParseError(f"expected {n} rows, found {len(body)}", where)
    rows = []
    for lineno, line in body:
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"non-integer cell in {line!r}", lineno) from None
        if len(row) != n:
            raise ParseError(f"expected {n} cells, found {len(row)}", lineno)
        for v in row:
            if not 0 <= v < n:
                raise ParseError(f"cell {v} out of range 0..{n - 1}", lineno)
        rows.append(row)
    return CayleyTable(rows)


def read_table(path) -> CayleyTable:
    with open(path, "rb") as fh:
        return parse_table(fh.read())


def write_table(t: CayleyTable, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize_table(t))
