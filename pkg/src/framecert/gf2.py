"""Bit-packed linear algebra over GF(2).

Vectors are Python integers used as bit sets: bit ``i`` holds coordinate ``i``
(0-based).  Arbitrary-precision ints give the packed-word representation for
free, and XOR / popcount are single C-level operations.
"""
from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


def popcount(x: int) -> int:
    return x.bit_count()


def support(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def from_support(coords: Iterable[int]) -> int:
    x = 0
    for c in coords:
        x |= 1 << c
    return x


def dot(x: int, y: int) -> int:
    return (x & y).bit_count() & 1


@dataclass(frozen=True)
class Gf2Vector:
    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("negative length")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits set beyond vector length")

    @classmethod
    def from_list(cls, values: Sequence[int]) -> "Gf2Vector":
        return cls(len(values), from_support(i for i, b in enumerate(values) if b & 1))

    @classmethod
    def from_string(cls, text: str) -> "Gf2Vector":
        text = text.replace(" ", "").replace("_", "")
        return cls.from_list([int(ch) for ch in text])

    @classmethod
    def from_support(cls, length: int, coords: Iterable[int]) -> "Gf2Vector":
        return cls(length, from_support(coords))

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    @property
    def support(self) -> list[int]:
        return support(self.bits)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __add__(self, other: "Gf2Vector") -> "Gf2Vector":
        _same_length(self, other)
        return Gf2Vector(self.length, self.bits ^ other.bits)

    __xor__ = __add__

    def dot(self, other: "Gf2Vector") -> int:
        _same_length(self, other)
        return dot(self.bits, other.bits)

    def to_list(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.length)]

    def __str__(self) -> str:
        return "".join(str(b) for b in self.to_list())


def _same_length(a: Gf2Vector, b: Gf2Vector) -> None:
    if a.length != b.length:
        raise ValueError(f"length mismatch: {a.length} != {b.length}")


@dataclass(frozen=True)
class Gf2Matrix:
    """Row-major GF(2) matrix; ``rows`` holds packed row integers."""

    cols: int
    rows: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        for r in self.rows:
            if r < 0 or r >> self.cols:
                raise ValueError("row has bits beyond the column count")

    @classmethod
    def from_vectors(cls, vectors: Sequence[Gf2Vector], cols: Optional[int] = None) -> "Gf2Matrix":
        if cols is None:
            if not vectors:
                raise ValueError("column count needed for an empty matrix")
            cols = vectors[0].length
        for v in vectors:
            if v.length != cols:
                raise ValueError("ragged rows")
        return cls(cols, tuple(v.bits for v in vectors))

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "Gf2Matrix":
        return cls.from_vectors([Gf2Vector.from_list(r) for r in rows], cols)

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Gf2Matrix":
        return cls(cols, (0,) * rows)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.cols

    def row(self, i: int) -> Gf2Vector:
        return Gf2Vector(self.cols, self.rows[i])

    def vectors(self) -> list[Gf2Vector]:
        return [Gf2Vector(self.cols, r) for r in self.rows]

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[Gf2Vector]:
        return iter(self.vectors())

    def to_lists(self) -> list[list[int]]:
        return [v.to_list() for v in self.vectors()]

    def combine(self, coeffs: Gf2Vector) -> Gf2Vector:
        """Return ``coeffs · M``."""
        if coeffs.length != self.nrows:
            raise ValueError("coefficient length must equal the row count")
        acc = 0
        for i in support(coeffs.bits):
            acc ^= self.rows[i]
        return Gf2Vector(self.cols, acc)

    def apply(self, v: Gf2Vector) -> Gf2Vector:
        """Return ``M · vᵀ`` as a vector of length ``nrows``."""
        if v.length != self.cols:
            raise ValueError("vector length must equal the column count")
        return Gf2Vector(self.nrows, from_support(i for i, r in enumerate(self.rows) if dot(r, v.bits)))


def _rref_rows(rows: Iterable[int]) -> tuple[list[int], list[int]]:
    """Reduced echelon form of packed rows, zero rows dropped, pivots ascending."""
    reduced: list[int] = []
    pivots: list[int] = []
    for r in rows:
        for p, pr in zip(pivots, reduced):
            if (r >> p) & 1:
                r ^= pr
        if not r:
            continue
        p = (r & -r).bit_length() - 1
        for j, pr in enumerate(reduced):
            if (pr >> p) & 1:
                reduced[j] = pr ^ r
        reduced.append(r)
        pivots.append(p)
    order = sorted(range(len(pivots)), key=pivots.__getitem__)
    return [reduced[j] for j in order], [pivots[j] for j in order]


def rref(m: Gf2Matrix) -> tuple[Gf2Matrix, list[int]]:
    rows, pivots = _rref_rows(m.rows)
    return Gf2Matrix(m.cols, tuple(rows)), pivots


def rank(m: Gf2Matrix) -> int:
    return len(_rref_rows(m.rows)[1])


def rank_of_rows(rows: Iterable[int]) -> int:
    return len(_rref_rows(rows)[1])


def kernel_basis(m: Gf2Matrix) -> Gf2Matrix:
    """Basis of {v : M vᵀ = 0}, one vector per non-pivot column."""
    rows, pivots = _rref_rows(m.rows)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = 1 << f
        for p, r in zip(pivots, rows):
            if (r >> f) & 1:
                v |= 1 << p
        basis.append(v)
    return Gf2Matrix(m.cols, tuple(basis))


def in_span(m: Gf2Matrix, v: Gf2Vector) -> Optional[Gf2Vector]:
    """Coefficients ``c`` with ``c · M = v``, or None when v is outside the row space."""
    if v.length != m.cols:
        raise ValueError(f"vector length {v.length} != matrix cols {m.cols}")
    # echelon rows kept sorted by pivot; each carries the combination of original rows that produced it
    reduced: list[tuple[int, int, int]] = []  # (pivot, row, history)
    for i, r in enumerate(m.rows):
        h = 1 << i
        for p, pr, ph in reduced:
            if (r >> p) & 1:
                r ^= pr
                h ^= ph
        if r:
            bisect.insort(reduced, ((r & -r).bit_length() - 1, r, h))
    target, coeffs = v.bits, 0
    for p, pr, ph in reduced:
        if (target >> p) & 1:
            target ^= pr
            coeffs ^= ph
    if target:
        return None
    return Gf2Vector(m.nrows, coeffs)
