"""Steiner systems S(3, 4, n) built from weight-4 codeword supports."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import DesignError

Block = tuple[int, int, int, int]
Triple = tuple[int, int, int]


def _normalize(blocks: Iterable[Sequence[int]], n: int) -> list[Block]:
    out = []
    for b in blocks:
        s = tuple(sorted(b))
        if len(s) != 4 or len(set(s)) != 4:
            raise ValueError(f"block {list(b)} is not a 4-subset")
        if s[0] < 0 or s[-1] >= n:
            raise ValueError(f"block {list(b)} leaves the point set 0..{n - 1}")
        out.append(s)
    return out


def _triple_counts(blocks: list[Block]) -> Counter:
    return Counter(t for b in blocks for t in combinations(b, 3))


def _first_violation(blocks: list[Block], n: int):
    counts = _triple_counts(blocks)
    for t in combinations(range(n), 3):
        if counts[t] != 1:
            return t, counts[t]
    return None


def is_steiner_3_4(blocks: Iterable[Sequence[int]], n: int) -> bool:
    """Exhaustively check that every 3-subset of 0..n-1 lies in exactly one block."""
    return _first_violation(_normalize(blocks, n), n) is None


@dataclass(frozen=True)
class SteinerSystem:
    n: int
    blocks: tuple[Block, ...]
    index: dict = field(repr=False, compare=False, hash=False)

    def __len__(self) -> int:
        return len(self.blocks)


def build(blocks: Iterable[Sequence[int]], n: int) -> SteinerSystem:
    norm = _normalize(blocks, n)
    dupes = [b for b, c in Counter(norm).items() if c > 1]
    if dupes:
        raise DesignError(f"duplicate block {list(dupes[0])}")
    bad = _first_violation(norm, n)
    if bad is not None:
        t, count = bad
        raise DesignError(f"triple {list(t)} lies in {count} blocks")
    norm.sort()
    index = {t: b for b in norm for t in combinations(b, 3)}
    assert len(index) == comb(n, 3)
    return SteinerSystem(n, tuple(norm), index)


def lookup(system: SteinerSystem, triple: Iterable[int]) -> Block:
    t = tuple(sorted(triple))
    if len(t) != 3 or len(set(t)) != 3:
        raise ValueError(f"{list(triple)} is not a 3-subset")
    return system.index[t]
