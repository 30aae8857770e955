"""Binary linear codes, weight enumeration and the bundled length-48 frame code."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from importlib import resources
from math import comb
from typing import Iterable, Iterator, Sequence

from . import gf2
from .errors import ConsistencyError, MatrixParseError, ResourceGuardError
from .gf2 import Gf2Matrix, Gf2Vector

MAX_ENUM_DIM = 28
MAX_SUBSET_SCAN = 10**7

BLOCKS = (range(0, 16), range(16, 32), range(32, 48))


@dataclass(frozen=True)
class WeightDistribution:
    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(a) for a in self.counts))
        if len(self.counts) != self.n + 1:
            raise ValueError("need exactly n + 1 counts")
        if any(a < 0 for a in self.counts):
            raise ValueError("negative weight count")
        total = sum(self.counts)
        if self.counts[0] != 1 or total & (total - 1):
            raise ValueError("not the distribution of a linear code (A0 != 1 or size not a power of 2)")

    @property
    def dimension(self) -> int:
        return sum(self.counts).bit_length() - 1

    def __getitem__(self, w: int) -> int:
        return self.counts[w] if 0 <= w <= self.n else 0

    def nonzero(self) -> dict[int, int]:
        return {w: a for w, a in enumerate(self.counts) if a}

    @classmethod
    def from_weights(cls, n: int, weights: Iterable[int]) -> "WeightDistribution":
        counts = [0] * (n + 1)
        for w in weights:
            counts[w] += 1
        return cls(n, tuple(counts))


@dataclass(frozen=True)
class LinearCode:
    """A binary [n, k] code stored by its canonical (rref) generator matrix.

    Two codes are equal exactly when their canonical generators are equal.
    """

    gen: Gf2Matrix

    def __post_init__(self):
        canonical, _ = gf2.rref(self.gen)
        if canonical != self.gen:
            raise ValueError("generator is not in canonical form; use from_generators")

    @property
    def n(self) -> int:
        return self.gen.cols

    @property
    def k(self) -> int:
        return self.gen.nrows

    @cached_property
    def dual_gen(self) -> Gf2Matrix:
        return gf2.rref(gf2.kernel_basis(self.gen))[0]

    @property
    def params(self) -> tuple[int, int]:
        return self.n, self.k

    def __repr__(self) -> str:
        return f"LinearCode[{self.n},{self.k}]"


def from_generators(rows: Gf2Matrix) -> LinearCode:
    if rows.cols < 1:
        raise ValueError("code length must be at least 1")
    return LinearCode(gf2.rref(rows)[0])


def code_from_rows(n: int, rows: Iterable[int]) -> LinearCode:
    # no n >= 1 check: shortening a length-1 code legitimately gives length 0
    return LinearCode(gf2.rref(Gf2Matrix(n, tuple(rows)))[0])


def zero_code(n: int) -> LinearCode:
    return LinearCode(Gf2Matrix(n, ()))


def full_space(n: int) -> LinearCode:
    return LinearCode(Gf2Matrix.identity(n))


def repetition_code(n: int) -> LinearCode:
    return code_from_rows(n, [(1 << n) - 1])


def dual(code: LinearCode) -> LinearCode:
    return LinearCode(code.dual_gen)


def contains(code: LinearCode, w: Gf2Vector) -> bool:
    if w.length != code.n:
        raise ValueError(f"word length {w.length} != code length {code.n}")
    return _contains_bits(code, w.bits)


def _contains_bits(code: LinearCode, bits: int) -> bool:
    return not any((bits & h).bit_count() & 1 for h in code.dual_gen.rows)


def _guard_enum(code: LinearCode) -> None:
    if code.k > MAX_ENUM_DIM:
        raise ResourceGuardError(f"refusing to enumerate 2^{code.k} codewords (limit 2^{MAX_ENUM_DIM})")


def iter_codeword_bits(code: LinearCode) -> Iterator[int]:
    """Yield all codewords as packed ints in binary-reflected Gray-code order.

    Word t is gray(t)·G with gray(t) = t ^ (t >> 1), so consecutive words differ
    by one generator row.  The first word is zero.
    """
    _guard_enum(code)
    rows = code.gen.rows
    word = 0
    yield word
    for t in range(1, 1 << code.k):
        word ^= rows[(t & -t).bit_length() - 1]
        yield word


def enumerate_codewords(code: LinearCode) -> list[Gf2Vector]:
    return [Gf2Vector(code.n, w) for w in iter_codeword_bits(code)]


def _direct_distribution(code: LinearCode) -> WeightDistribution:
    counts = [0] * (code.n + 1)
    for w in iter_codeword_bits(code):
        counts[w.bit_count()] += 1
    return WeightDistribution(code.n, tuple(counts))


def krawtchouk(j: int, i: int, n: int) -> int:
    return sum((-1) ** t * comb(i, t) * comb(n - i, j - t) for t in range(min(i, j) + 1))


def macwilliams_transform(dist: WeightDistribution, k: int) -> WeightDistribution:
    """Weight distribution of the dual of an [n, k] code with distribution ``dist``."""
    n = dist.n
    if sum(dist.counts) != 1 << k:
        raise ConsistencyError(f"distribution sums to {sum(dist.counts)}, not 2^{k}")
    scale = 1 << k
    out = []
    for j in range(n + 1):
        total = sum(a * krawtchouk(j, i, n) for i, a in enumerate(dist.counts) if a)
        q, r = divmod(total, scale)
        if r:
            raise ConsistencyError(f"MacWilliams sum for weight {j} is not divisible by 2^{k}")
        out.append(q)
    try:
        return WeightDistribution(n, tuple(out))
    except ValueError as exc:
        raise ConsistencyError(f"MacWilliams transform is not a code distribution: {exc}") from None


def weight_distribution(code: LinearCode) -> WeightDistribution:
    """Exact weight distribution, enumerating whichever of C and its dual is smaller."""
    r = code.n - code.k
    if code.k <= r and code.k <= MAX_ENUM_DIM:
        return _direct_distribution(code)
    if r <= MAX_ENUM_DIM:
        return macwilliams_transform(_direct_distribution(dual(code)), r)
    if code.k <= MAX_ENUM_DIM:
        return _direct_distribution(code)
    raise ResourceGuardError(f"[{code.n},{code.k}] code: both k and n-k exceed {MAX_ENUM_DIM}")


def minimum_weight(code: LinearCode) -> int:
    if code.k == 0:
        raise ValueError("the zero code has no minimum weight")
    dist = weight_distribution(code)
    return next(w for w in range(1, code.n + 1) if dist[w])


def words_of_weight(code: LinearCode, w: int) -> list[Gf2Vector]:
    """All codewords of weight ``w``, ordered lexicographically by sorted support."""
    n = code.n
    if not 0 <= w <= n:
        return []
    if w == 0:
        return [Gf2Vector(n, 0)]
    subsets = comb(n, w)
    if subsets <= MAX_SUBSET_SCAN and (code.k > MAX_ENUM_DIM or subsets <= 1 << code.k):
        found = _scan_weight(code, w)
    elif code.k <= MAX_ENUM_DIM:
        found = sorted((x for x in iter_codeword_bits(code) if x.bit_count() == w), key=gf2.support)
    else:
        raise ResourceGuardError(f"C({n},{w}) = {subsets} subsets and k = {code.k} both exceed the guards")
    for x in found:
        if not _contains_bits(code, x):
            raise ConsistencyError("weight scan produced a non-codeword")
    return [Gf2Vector(n, x) for x in found]


def _scan_weight(code: LinearCode, w: int) -> list[int]:
    # a word is a codeword iff the XOR of the parity-check columns on its support is 0
    n = code.n
    syndromes = [0] * n
    for j, h in enumerate(code.dual_gen.rows):
        for i in gf2.support(h):
            syndromes[i] |= 1 << j
    by_syndrome: dict[int, list[int]] = {}
    for i, s in enumerate(syndromes):
        by_syndrome.setdefault(s, []).append(i)
    found = []
    for prefix in itertools.combinations(range(n), w - 1):
        s = 0
        for i in prefix:
            s ^= syndromes[i]
        last = prefix[-1] if prefix else -1
        head = gf2.from_support(prefix)
        for i in by_syndrome.get(s, ()):
            if i > last:
                found.append(head | (1 << i))
    return found


def _delete_coordinate(x: int, i: int) -> int:
    return ((x >> (i + 1)) << i) | (x & ((1 << i) - 1))


def _vanish_on(rows: Sequence[int], coords: Iterable[int]) -> list[int]:
    """Rows spanning the subcode of span(rows) that is zero on ``coords``."""
    rows = list(rows)
    for c in coords:
        pivot = next((r for r in rows if (r >> c) & 1), None)
        if pivot is None:
            continue
        rows = [r ^ pivot if (r >> c) & 1 else r for r in rows if r != pivot]
        rows = [r for r in rows if r]
    return rows


def shorten(code: LinearCode, i: int) -> LinearCode:
    if not 0 <= i < code.n:
        raise ValueError(f"coordinate {i} out of range for length {code.n}")
    rows = _vanish_on(code.gen.rows, [i])
    return code_from_rows(code.n - 1, (_delete_coordinate(r, i) for r in rows))


def _check_coords(code: LinearCode, coords: Sequence[int]) -> list[int]:
    coords = list(coords)
    if len(set(coords)) != len(coords):
        raise ValueError("duplicate coordinates")
    if any(not 0 <= c < code.n for c in coords):
        raise ValueError(f"coordinate out of range for length {code.n}")
    if not coords:
        raise ValueError("empty coordinate set")
    return coords


def project(x: int, coords: Sequence[int]) -> int:
    out = 0
    for j, c in enumerate(coords):
        if (x >> c) & 1:
            out |= 1 << j
    return out


def embed(x: int, coords: Sequence[int]) -> int:
    """Inverse of ``project``: place bit j of x at coordinate coords[j]."""
    out = 0
    for j in gf2.support(x):
        out |= 1 << coords[j]
    return out


def restrict(code: LinearCode, coords: Sequence[int]) -> LinearCode:
    """Puncture to ``coords`` (kept in the given order)."""
    coords = _check_coords(code, coords)
    return code_from_rows(len(coords), (project(r, coords) for r in code.gen.rows))


def subcode_supported_on(code: LinearCode, coords: Sequence[int]) -> LinearCode:
    coords = _check_coords(code, coords)
    keep = set(coords)
    rows = _vanish_on(code.gen.rows, [c for c in range(code.n) if c not in keep])
    return code_from_rows(len(coords), (project(r, coords) for r in rows))


def rm1(m: int) -> LinearCode:
    """First-order Reed-Muller code of length 2^m (the extended simplex code).

    Row j (1 <= j <= m) is the indicator of coordinates x whose bit m - j is set,
    so rm1(4) matches the per-block patterns of the frame code rows 3..6.
    """
    if not 2 <= m <= 10:
        raise ValueError("m must lie in 2..10")
    n = 1 << m
    rows = [(1 << n) - 1]
    for j in range(1, m + 1):
        bit = m - j
        rows.append(gf2.from_support(x for x in range(n) if (x >> bit) & 1))
    return code_from_rows(n, rows)


def extended_hamming(m: int) -> LinearCode:
    return dual(rm1(m))


def moonshine_frame_matrix() -> Gf2Matrix:
    """The 7 x 48 generator matrix of the frame code D, rows as printed."""
    text = resources.files("framecert.data").joinpath("frame_code_D.txt").read_text()
    return parse_generator_matrix(text)


def moonshine_frame_code_D() -> LinearCode:
    return from_generators(moonshine_frame_matrix())


def parse_generator_matrix(text: str) -> Gf2Matrix:
    rows: list[str] = []
    width = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].replace(" ", "").replace("_", "").replace("\t", "")
        if not body:
            continue
        bad = set(body) - {"0", "1"}
        if bad:
            raise MatrixParseError(lineno, f"unexpected character {sorted(bad)[0]!r}")
        if width is None:
            width = len(body)
        elif len(body) != width:
            raise MatrixParseError(lineno, f"row has {len(body)} entries, expected {width}")
        rows.append(body)
    if width is None:
        raise MatrixParseError(0, "no matrix rows")
    return Gf2Matrix(width, tuple(gf2.from_support(i for i, ch in enumerate(r) if ch == "1") for r in rows))


def emit_generator_matrix(m: Gf2Matrix, group: int = 4) -> str:
    lines = []
    for v in m.vectors():
        s = str(v)
        lines.append(" ".join(s[i : i + group] for i in range(0, len(s), group)) if group else s)
    return "\n".join(lines) + "\n"
