"""Constructive weight-4 spanning certificates for the frame codes.

The decomposition reduces a codeword by weight-4 words taken from the Steiner
systems of the two-block subcodes, and, for the shortened code, repairs pairs of
parts that meet the fixed coordinate using either the complementary two-block
system or the single-block system containing the fixed coordinate.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

from . import codes, designs, gf2
from .codes import LinearCode
from .errors import ConsistencyError
from .gf2 import Gf2Matrix, Gf2Vector

BRANCH_PAIR_WEIGHT4 = "pair_weight_4"
BRANCH_LOW = "weight_6_i_le_3"
BRANCH_HIGH = "weight_6_i_ge_4"


@dataclass(frozen=True)
class BlockPartition:
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for b in self.blocks:
            if seen & set(b):
                raise ValueError("blocks overlap")
            seen |= set(b)
        if seen != set(range(len(seen))):
            raise ValueError("blocks do not cover 0..n-1")

    @classmethod
    def from_generator_rows(cls, m: Gf2Matrix, count: int = 3) -> "BlockPartition":
        """Read the blocks off the supports of the first ``count`` rows as given (not rref)."""
        if m.nrows < count:
            raise ValueError(f"need at least {count} generator rows")
        return cls(tuple(tuple(gf2.support(r)) for r in m.rows[:count]))

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def block_of(self, coord: int) -> int:
        for j, b in enumerate(self.blocks):
            if coord in b:
                return j
        raise ValueError(f"coordinate {coord} is in no block")

    def union(self, which: Iterable[int]) -> list[int]:
        return sorted(c for j in which for c in self.blocks[j])


@dataclass
class Weight4Certificate:
    target: Gf2Vector
    parts: list[Gf2Vector]
    shortened_flag: bool = False
    fixed: Optional[int] = None
    branches: Counter = field(default_factory=Counter)

    def supports(self) -> list[list[int]]:
        return [p.support for p in self.parts]


class SteinerContext:
    """Steiner lookup tables for every block pair and single block of a code.

    Construction fails with DesignError unless each of these subcodes has weight-4
    supports forming an S(3, 4, |S|); lookups return packed words of the full-length code.
    """

    def __init__(self, code: LinearCode, partition: BlockPartition):
        if partition.n != code.n:
            raise ValueError("partition does not match the code length")
        self.code = code
        self.partition = partition
        self.block_of = [partition.block_of(c) for c in range(code.n)]
        nblocks = len(partition.blocks)
        self.systems: dict[tuple[int, ...], designs.SteinerSystem] = {}
        self.index: dict[tuple[int, ...], dict[tuple[int, int, int], int]] = {}
        for which in list(combinations(range(nblocks), 2)) + [(j,) for j in range(nblocks)]:
            self._add(which)

    def _add(self, which: tuple[int, ...]) -> None:
        coords = self.partition.union(which)
        sub = codes.subcode_supported_on(self.code, coords)
        words = codes.words_of_weight(sub, 4)
        system = designs.build((w.support for w in words), len(coords))
        self.systems[which] = system
        table = {}
        for t, block in system.index.items():
            table[tuple(coords[i] for i in t)] = gf2.from_support(coords[i] for i in block)
        self.index[which] = table

    def lookup(self, which: tuple[int, ...], triple: Sequence[int]) -> int:
        return self.index[which][tuple(sorted(triple))]


def span_dimension_of_weight_words(code: LinearCode, w: int) -> int:
    return gf2.rank_of_rows(v.bits for v in codes.words_of_weight(code, w))


def _reduce(ctx: SteinerContext, c: int) -> list[int]:
    parts = []
    pairs = list(combinations(range(len(ctx.partition.blocks)), 2))
    while c.bit_count() >= 6:
        supp = gf2.support(c)
        per_block = Counter(ctx.block_of[x] for x in supp)
        pair = next((p for p in pairs if sum(per_block[j] for j in p) >= 4), None)
        if pair is None:
            raise ConsistencyError("pigeonhole: no two blocks hold four support coordinates")
        triple = [x for x in supp if ctx.block_of[x] in pair][:3]
        v = ctx.lookup(pair, triple)
        if (v & c).bit_count() < 3:
            raise ConsistencyError("Steiner word meets the support in fewer than 3 coordinates")
        parts.append(v)
        c ^= v
    w = c.bit_count()
    if w == 4:
        parts.append(c)
    elif w:
        raise ConsistencyError(f"weight-{w} remainder contradicts 'C has minimal weight 4'")
    return parts


def decompose_weight4(code: LinearCode, partition: BlockPartition, target: Gf2Vector,
                      ctx: Optional[SteinerContext] = None) -> Weight4Certificate:
    if not codes.contains(code, target):
        raise ValueError("target is not a codeword")
    ctx = ctx or SteinerContext(code, partition)
    parts = _reduce(ctx, target.bits)
    cert = Weight4Certificate(target, [Gf2Vector(code.n, p) for p in parts])
    validate_certificate(cert, code)
    return cert


def _cancel_pairs(parts: list[int]) -> list[int]:
    counts = Counter(parts)
    out, seen = [], set()
    for p in parts:
        if counts[p] % 2 and p not in seen:
            out.append(p)
            seen.add(p)
    return out


def decompose_weight4_shortened(code: LinearCode, fixed: int, partition: BlockPartition,
                                target: Gf2Vector,
                                ctx: Optional[SteinerContext] = None) -> Weight4Certificate:
    if not codes.contains(code, target):
        raise ValueError("target is not a codeword")
    if target[fixed]:
        raise ValueError(f"target is 1 at the fixed coordinate {fixed}")
    ctx = ctx or SteinerContext(code, partition)
    bit = 1 << fixed
    parts = _cancel_pairs(_reduce(ctx, target.bits))
    kept = [p for p in parts if not p & bit]
    hits = sorted((p for p in parts if p & bit), key=gf2.support)
    if len(hits) % 2:
        raise ConsistencyError("odd number of parts meet the fixed coordinate")

    branches: Counter = Counter()
    for p, q in zip(hits[::2], hits[1::2]):
        repaired, branch = repair_pair(ctx, p, q, fixed)
        kept.extend(repaired)
        branches[branch] += 1

    cert = Weight4Certificate(target, [Gf2Vector(code.n, p) for p in kept],
                              shortened_flag=True, fixed=fixed, branches=branches)
    validate_certificate(cert, code)
    return cert


def repair_pair(ctx: SteinerContext, p: int, q: int, fixed: int) -> tuple[list[int], str]:
    """Rewrite p + q, two weight-4 words that are 1 at ``fixed``, as words vanishing there."""
    bit = 1 << fixed
    if not (p & bit and q & bit) or p == q:
        raise ValueError("need two distinct words that are both 1 at the fixed coordinate")
    home = ctx.block_of[fixed]
    others = tuple(j for j in range(len(ctx.partition.blocks)) if j != home)
    d = p ^ q
    wd = d.bit_count()
    if wd == 4:
        return [d], BRANCH_PAIR_WEIGHT4
    if wd != 6:
        raise ConsistencyError(
            f"sum of two weight-4 parts has weight {wd}; contradicts 'C has minimal weight 4'")
    supp = gf2.support(d)
    inside = [x for x in supp if ctx.block_of[x] == home]
    if len(inside) <= 3:
        outside = [x for x in supp if ctx.block_of[x] != home][:3]
        v = ctx.lookup(others, outside)
        branch = BRANCH_LOW
    else:
        four = inside[:4]
        v1 = ctx.lookup((home,), four[:3])
        v2 = ctx.lookup((home,), four[1:])
        if v1 == v2:
            raise ConsistencyError("both triples give the same word: d + v would have weight 2")
        if v1 & bit and v2 & bit:
            raise ConsistencyError("not both words can be 1 at the distinguished coordinate")
        v = v2 if v1 & bit else v1
        branch = BRANCH_HIGH
    w = d ^ v
    if v.bit_count() != 4 or w.bit_count() != 4 or (v | w) & bit:
        raise ConsistencyError("repair of a weight-6 pair did not give two weight-4 words")
    return [v, w], branch


def validate_certificate(cert: Weight4Certificate, code: LinearCode,
                         shortened: Optional[LinearCode] = None) -> None:
    """Raise ConsistencyError unless the certificate is sound."""
    acc = 0
    for p in cert.parts:
        if p.weight != 4:
            raise ConsistencyError(f"part {p.support} has weight {p.weight}")
        if not codes.contains(code, p):
            raise ConsistencyError(f"part {p.support} is not a codeword")
        acc ^= p.bits
    if acc != cert.target.bits:
        raise ConsistencyError("parts do not sum to the target")
    if cert.shortened_flag:
        i = cert.fixed
        if shortened is None:
            shortened = codes.shorten(code, i)
        for p in cert.parts:
            if p[i]:
                raise ConsistencyError(f"part {p.support} is 1 at the fixed coordinate")
            q = Gf2Vector(code.n - 1, codes._delete_coordinate(p.bits, i))
            if not codes.contains(shortened, q):
                raise ConsistencyError("shortened part is not in the shortened code")


def generated_by_weights(code: LinearCode, weights: Iterable[int]) -> bool:
    ws = set(weights)
    rows = [x for x in codes.iter_codeword_bits(code) if x.bit_count() in ws]
    return gf2.rank_of_rows(rows) == code.k


def hamming_identification(code: LinearCode, D: LinearCode, coords: Sequence[int]) -> dict:
    """Witness data for identifying the subcode on ``coords`` with an extended Hamming code.

    The Steiner condition is only required for proper coordinate subsets; on the
    full coordinate set the check reduces to dual(C) = D.
    """
    coords = list(coords)
    sub = codes.subcode_supported_on(code, coords)
    res = codes.restrict(D, coords)
    out = {
        "length": len(coords),
        "dim_subcode": sub.k,
        "dim_restriction": res.k,
        "dual_equals_restriction": codes.dual(sub) == res,
        "parameters_ok": sub.k == len(coords) - res.k,
    }
    out["min_weight"] = codes.minimum_weight(sub) if sub.k else None
    out["min_weight_ok"] = out["min_weight"] == 4
    if len(coords) < code.n:
        blocks = [w.support for w in codes.words_of_weight(sub, 4)]
        out["steiner_blocks"] = len(blocks)
        out["steiner_ok"] = designs.is_steiner_3_4(blocks, len(coords))
    else:
        out["steiner_ok"] = True
    out["ok"] = all(out[key] for key in ("dual_equals_restriction", "parameters_ok", "min_weight_ok", "steiner_ok"))
    return out


def verify_hamming_identification(code: LinearCode, D: LinearCode, coords: Sequence[int]) -> bool:
    return hamming_identification(code, D, coords)["ok"]


def random_codewords(code: LinearCode, count: int, rng: random.Random) -> list[Gf2Vector]:
    rows = code.gen.rows
    out = []
    for _ in range(count):
        coeffs = rng.getrandbits(code.k) if code.k else 0
        acc = 0
        for i in gf2.support(coeffs):
            acc ^= rows[i]
        out.append(Gf2Vector(code.n, acc))
    return out


def insert_zero(x: int, i: int) -> int:
    """Re-embed a shortened word by inserting a 0 at coordinate ``i``."""
    return ((x >> i) << (i + 1)) | (x & ((1 << i) - 1))
