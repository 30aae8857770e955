import random
from collections import Counter
from itertools import combinations
from math import comb

import pytest

from framecert import codes, designs
from framecert.errors import DesignError


def hamming_blocks(m):
    return [w.support for w in codes.words_of_weight(codes.extended_hamming(m), 4)]


def test_hamming_steiner_examples():
    b16, b32 = hamming_blocks(4), hamming_blocks(5)
    assert len(b16) == comb(16, 3) // 4 == 140
    assert len(b32) == comb(32, 3) // 4 == 1240
    assert designs.is_steiner_3_4(b16, 16)
    assert designs.is_steiner_3_4(b32, 32)


def test_double_cover_rejected():
    assert not designs.is_steiner_3_4([(0, 1, 2, 3), (0, 1, 2, 4)], 5)
    with pytest.raises(DesignError, match="triple"):
        designs.build([(0, 1, 2, 3), (0, 1, 2, 4)], 5)


def test_malformed_blocks():
    with pytest.raises(ValueError):
        designs.is_steiner_3_4([(0, 1, 2)], 4)
    with pytest.raises(ValueError):
        designs.is_steiner_3_4([(0, 1, 2, 9)], 5)
    with pytest.raises(DesignError, match="duplicate"):
        designs.build(hamming_blocks(4) + [hamming_blocks(4)[0]], 16)


def test_build_from_subcode_matches(C):
    sub = codes.subcode_supported_on(C, range(16, 48))
    direct = designs.build((w.support for w in codes.words_of_weight(sub, 4)), 32)
    assert len(direct) == 1240
    assert direct.blocks == designs.build(hamming_blocks(5), 32).blocks


def test_lookup_counts():
    system = designs.build(hamming_blocks(4), 16)
    hits = Counter(designs.lookup(system, t) for t in combinations(range(16), 3))
    assert len(hits) == 140 and set(hits.values()) == {4}
    for t in combinations(range(16), 3):
        block = designs.lookup(system, t)
        assert set(t) <= set(block)
        assert all(designs.lookup(system, u) == block for u in combinations(block, 3))
    assert sum(comb(4, 3) for _ in system.blocks) == comb(16, 3)


def test_order_independent():
    blocks = hamming_blocks(4)
    shuffled = [tuple(reversed(b)) for b in blocks]
    random.Random(3).shuffle(shuffled)
    a, b = designs.build(blocks, 16), designs.build(shuffled, 16)
    assert a.blocks == b.blocks and a.index == b.index
