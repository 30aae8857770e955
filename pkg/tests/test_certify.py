import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from framecert import certify, codes, gf2
from framecert.errors import ConsistencyError
from framecert.gf2 import Gf2Vector


def embed0(v, i=0):
    return Gf2Vector(v.length + 1, certify.insert_zero(v.bits, i))


def test_partition(partition):
    assert partition.blocks == tuple(tuple(b) for b in codes.BLOCKS)
    assert partition.block_of(17) == 1
    with pytest.raises(ValueError):
        certify.BlockPartition(((0, 1), (1, 2)))


def test_span_dimensions(C, C_short):
    assert certify.span_dimension_of_weight_words(C, 4) == 41
    assert certify.span_dimension_of_weight_words(C_short, 4) == 40
    assert certify.span_dimension_of_weight_words(codes.repetition_code(4), 4) == 1


def test_decompose_trivial(C, partition, ctx):
    assert certify.decompose_weight4(C, partition, Gf2Vector(48, 0), ctx).parts == []
    w = codes.words_of_weight(C, 4)[17]
    assert certify.decompose_weight4(C, partition, w, ctx).parts == [w]
    with pytest.raises(ValueError):
        certify.decompose_weight4(C, partition, Gf2Vector(48, 1), ctx)


def test_decompose_basis_rows(C, partition, ctx):
    for row in C.gen.vectors():
        cert = certify.decompose_weight4(C, partition, row, ctx)
        assert all(p.weight == 4 and codes.contains(C, p) for p in cert.parts)
        acc = 0
        for p in cert.parts:
            acc ^= p.bits
        assert acc == row.bits
        assert len(cert.parts) <= row.weight // 2


def test_decompose_builds_its_own_context(C, partition):
    row = C.gen.row(0)
    assert certify.decompose_weight4(C, partition, row).parts


def test_shortened_basis_rows(C, C_short, partition, ctx):
    for row in C_short.gen.vectors():
        cert = certify.decompose_weight4_shortened(C, 0, partition, embed0(row), ctx)
        assert cert.shortened_flag
        assert all(not p[0] for p in cert.parts)
        certify.validate_certificate(cert, C, C_short)


def test_shortened_rejects_bad_targets(C, partition, ctx):
    assert certify.decompose_weight4_shortened(C, 0, partition, Gf2Vector(48, 0), ctx).parts == []
    hit = next(w for w in codes.words_of_weight(C, 4) if w[0])
    with pytest.raises(ValueError):
        certify.decompose_weight4_shortened(C, 0, partition, hit, ctx)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**40 - 1))
def test_shortened_random(C, C_short, partition, ctx, coeffs):
    target = embed0(C_short.gen.combine(Gf2Vector(40, coeffs)))
    base = certify._reduce(ctx, target.bits)
    # termination metric: at most wt/2 reduction steps
    assert len(base) <= max(1, target.weight // 2)
    assert sum(1 for p in base if p & 1) % 2 == 0
    cert = certify.decompose_weight4_shortened(C, 0, partition, target, ctx)
    certify.validate_certificate(cert, C, C_short)


@pytest.mark.parametrize("fixed", [5, 16, 47])
def test_shortened_other_fixed_coordinates(C, partition, ctx, fixed):
    short = codes.shorten(C, fixed)
    for v in certify.random_codewords(short, 50, random.Random(fixed)):
        t = embed0(v, fixed)
        cert = certify.decompose_weight4_shortened(C, fixed, partition, t, ctx)
        certify.validate_certificate(cert, C, short)


def test_repair_pair_branches(C, ctx):
    w = lambda *s: gf2.from_support(s)
    # two 2+2 words through coordinate 0, i = 2
    parts, branch = certify.repair_pair(ctx, w(0, 1, 16, 17), w(0, 2, 32, 34), 0)
    assert branch == certify.BRANCH_LOW
    # a block-0 word and a 2+2 word, i = 4
    parts2, branch2 = certify.repair_pair(ctx, w(0, 1, 2, 3), w(0, 4, 16, 20), 0)
    assert branch2 == certify.BRANCH_HIGH
    # overlapping in two coordinates: sum has weight 4
    parts3, branch3 = certify.repair_pair(ctx, w(0, 1, 2, 3), w(0, 1, 4, 5), 0)
    assert branch3 == certify.BRANCH_PAIR_WEIGHT4 and parts3 == [w(2, 3, 4, 5)]
    for (p, q), out in [((w(0, 1, 16, 17), w(0, 2, 32, 34)), parts), ((w(0, 1, 2, 3), w(0, 4, 16, 20)), parts2)]:
        for x in (p, q):
            assert codes.contains(C, Gf2Vector(48, x))
        acc = 0
        for x in out:
            assert x.bit_count() == 4 and not x & 1 and codes.contains(C, Gf2Vector(48, x))
            acc ^= x
        assert acc == p ^ q


def test_repair_pair_weight_two_is_contradiction(ctx):
    # not codewords, but exercises the guard: overlap of three gives weight 2
    p, q = gf2.from_support([0, 1, 2, 3]), gf2.from_support([0, 1, 2, 4])
    with pytest.raises(ConsistencyError, match="minimal weight 4"):
        certify.repair_pair(ctx, p, q, 0)


def test_no_low_branch_with_fixed_coordinate_in_first_block(C, C_short, partition, ctx):
    """With block-0 coordinates smallest, every part that first hits the fixed
    coordinate lies inside block 0, and a 2+2 hit empties block 0 for good, so
    two 2+2 hits are never paired and the i <= 3 repair never runs."""
    seen = Counter()
    for v in certify.random_codewords(C_short, 500, random.Random(11)):
        seen += certify.decompose_weight4_shortened(C, 0, partition, embed0(v), ctx).branches
    assert seen[certify.BRANCH_LOW] == 0 and seen[certify.BRANCH_HIGH] > 0


def test_validate_catches_bad_certificates(C):
    w4 = codes.words_of_weight(C, 4)
    cert = certify.Weight4Certificate(w4[0] + w4[1], [w4[0]])
    with pytest.raises(ConsistencyError, match="sum"):
        certify.validate_certificate(cert, C)
    cert = certify.Weight4Certificate(Gf2Vector(48, 0b11), [Gf2Vector(48, 0b11)])
    with pytest.raises(ConsistencyError, match="weight"):
        certify.validate_certificate(cert, C)
    hit = next(w for w in w4 if w[0])
    cert = certify.Weight4Certificate(hit, [hit], shortened_flag=True, fixed=0)
    with pytest.raises(ConsistencyError, match="fixed"):
        certify.validate_certificate(cert, C)


def test_generation(D, D_short):
    assert certify.generated_by_weights(D, {16, 24})
    assert certify.generated_by_weights(D_short, {16, 24})
    assert not certify.generated_by_weights(D, {48})


@pytest.mark.parametrize("coords", [range(16, 48), range(16), range(48)])
def test_hamming_identification(C, D, coords):
    assert certify.verify_hamming_identification(C, D, list(coords))


def test_hamming_identification_negative(C, D):
    # three coordinates of one block: subcode is zero, minimum weight check fails
    assert not certify.verify_hamming_identification(C, D, [0, 1, 2])


def test_low_branch_reached_from_second_block(C, partition, ctx):
    short = codes.shorten(C, 31)
    seen = Counter()
    for v in certify.random_codewords(short, 300, random.Random(0xB5)):
        cert = certify.decompose_weight4_shortened(C, 31, partition, embed0(v, 31), ctx)
        certify.validate_certificate(cert, C, short)
        seen += cert.branches
    assert seen[certify.BRANCH_LOW] > 0
