import random

import pytest

from brikseq import blocks
from brikseq.errors import CapExceededError
from brikseq.words import Word

from reference import OPENING_72, STAGE_TABLE, ref_block, ref_prefix


def test_block_length_examples():
    assert blocks.block_length(1) == 3
    assert blocks.block_length(4) == 13
    # frozen from the reference construction: len(ref_block(10)) == 523
    assert len(ref_block(10)) == 523
    assert blocks.block_length(10) == 523


def test_block_length_formula_and_recurrence_agree():
    for i in range(1, 300):
        assert blocks.block_length(i + 1) == 2 * blocks.block_length(i) - i
    assert blocks.block_length(11) == len(ref_block(11))
    with pytest.raises(ValueError):
        blocks.block_length(0)


def test_block_meta():
    meta = blocks.block_meta(8)
    assert meta.index == 8 and meta.length == 137


def test_build_block_matches_displayed_table():
    for i, expected in STAGE_TABLE.items():
        assert blocks.build_block(i).to01() == expected


def test_build_block_matches_reference():
    for i in range(1, 15):
        assert blocks.build_block(i).to01() == ref_block(i)


def test_build_block_structure():
    for i in range(1, 20):
        stage = blocks.build_block(i)
        assert stage.length == blocks.block_length(i)
        assert stage.to01().endswith("01")
        assert blocks.build_block(i + 1).startswith(stage)


def test_build_block_cap_error_names_cap_and_index():
    with pytest.raises(CapExceededError) as info:
        blocks.build_block(31)
    assert info.value.cap_value == 30 and info.value.requested == 31
    assert "30" in str(info.value) and "31" in str(info.value)
    # a raised cap admits more
    assert blocks.build_block(31, cap=31).length == blocks.block_length(31)


def test_prefix_examples():
    assert blocks.prefix(5).to01() == "10101"
    assert blocks.prefix(13).to01() == "1010110101101"
    assert blocks.prefix(72).to01() == OPENING_72


def test_prefix_matches_reference_at_odd_cuts():
    rng = random.Random(7)
    text = ref_prefix(50_000)
    for n in [1, 2, 3, 4, 21, 22, 23] + [rng.randrange(1, 50_000)
                                         for _ in range(40)]:
        assert blocks.prefix(n).to01() == text[:n]


def test_prefix_caps():
    with pytest.raises(ValueError):
        blocks.prefix(0)
    with pytest.raises(CapExceededError):
        blocks.prefix(10_000, memory_cap=9_999)


def test_buffer_partial_growth():
    # every target, grown one fresh buffer at a time, must agree with the
    # reference, including targets that stop mid-copy
    text = ref_prefix(700)
    for target in range(1, 700):
        buf = blocks.PrefixBuffer()
        buf.extend_to(target)
        assert buf.bits01(target) == text[:target], target


def test_buffer_incremental_growth():
    buf = blocks.PrefixBuffer()
    text = ref_prefix(4_000)
    rng = random.Random(11)
    target = 1
    while target < 4_000:
        target = min(4_000, target + rng.randrange(1, 77))
        buf.extend_to(target)
        assert buf.length >= target
    assert buf.bits01(4_000) == text


def test_stream_first_bits():
    assert list(blocks.stream(3)) == [1, 0, 1]
    assert list(blocks.stream(8)) == [1, 0, 1, 0, 1, 1, 0, 1]
    bits = list(blocks.stream(15))
    assert bits[13:15] == [1, 1]


def test_stream_matches_prefix():
    text = blocks.prefix01(100_000)
    for pos, bit in enumerate(blocks.stream(100_000), 1):
        assert bit == (text[pos - 1] == "1"), pos


def test_stream_unbounded_then_stop():
    cursor = blocks.stream()
    taken = [next(cursor) for _ in range(10)]
    assert taken == [1, 0, 1, 0, 1, 1, 0, 1, 0, 1]


def test_stream_halts_at_memory_cap():
    cursor = blocks.stream(memory_cap=64)
    with pytest.raises(CapExceededError):
        for _ in range(100):
            next(cursor)


def test_self_similarity_on_materialized_prefixes():
    # the copied span of stage n+1 equals the source span it was read from
    buf = blocks.shared_buffer()
    for n in range(2, 21):
        ell = blocks.block_length(n)
        span = ell - n
        assert buf.word(ell + 1, ell + span) == buf.word(n + 1, n + span)


def test_slice_identity_rebuilds_next_stage():
    for i in range(1, 16):
        stage = blocks.build_block(i)
        nxt = blocks.build_block(i + 1)
        assert nxt == stage + stage.slice(i + 1, stage.length)


def test_prefix01_agrees_with_prefix():
    assert blocks.prefix01(72) == blocks.prefix(72).to01() == OPENING_72


def test_reset_buffer_regrows():
    blocks.reset_buffer()
    assert blocks.prefix(8).to01() == "10101101"
