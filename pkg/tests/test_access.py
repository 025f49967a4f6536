import random

import pytest

from brikseq import access, blocks
from brikseq.errors import CapExceededError

from reference import ref_prefix


def test_find_block_index_examples():
    assert access.find_block_index(4) == 1
    assert access.find_block_index(14) == 4
    # the tier bracket is ell_n < N <= ell_{n+1}; the position 2^2059+2061
    # equals ell_2060 exactly, so its tier is 2059
    assert access.find_block_index(2 ** 2059 + 2061) == 2059


def test_find_block_index_bracket_property():
    for n_value in range(4, 5_000):
        tier = access.find_block_index(n_value)
        assert blocks.block_length(tier) < n_value <= blocks.block_length(tier + 1)
    rng = random.Random(3)
    for exponent in (32, 100, 500, 2060):
        for _ in range(5):
            position = (1 << exponent) + rng.randrange(1 << (exponent - 4))
            tier = access.find_block_index(position)
            assert blocks.block_length(tier) < position
            assert position <= blocks.block_length(tier + 1)
            assert tier < position.bit_length() + 2


def test_find_block_index_domain_error():
    for bad in (0, 1, 2, 3):
        with pytest.raises(ValueError):
            access.find_block_index(bad)
    with pytest.raises(ValueError):
        access.reduce_index(3)


def test_reduce_index_examples():
    assert access.reduce_index(4) == 2
    assert access.reduce_index(14) == 5
    assert access.reduce_index(8) == 5


def test_reduce_index_preserves_bit():
    text = ref_prefix(10_000)
    for position in range(4, 10_000):
        smaller = access.reduce_index(position)
        tier = access.find_block_index(position)
        assert tier + 1 <= smaller <= blocks.block_length(tier)
        assert smaller < position
        assert text[smaller - 1] == text[position - 1], position


def test_reduction_step_bound():
    for position in list(range(1, 3_000)) + [2 ** 2059 + 2061, 10 ** 100]:
        _, steps = access.bit_at_with_steps(position)
        assert steps <= position.bit_length() + 2


def test_bit_at_examples():
    assert access.bit_at(1) == 1
    assert access.bit_at(4) == 0
    assert access.bit_at(2061) == 1


def test_bit_at_against_reference():
    text = ref_prefix(20_000)
    for position in range(1, 20_001):
        assert access.bit_at(position) == (text[position - 1] == "1"), position


def test_bit_at_domain():
    with pytest.raises(ValueError):
        access.bit_at(0)


def test_window_examples():
    assert access.window(13, 3).to01() == "111"
    assert access.window(1, 8).to01() == "10101101"
    assert access.window(2 ** 2059 + 2060, 7).to01() == "0111110"


def test_window_concatenation():
    rng = random.Random(5)
    for _ in range(25):
        position = rng.randrange(1, 10 ** 6)
        a, b = rng.randrange(1, 40), rng.randrange(1, 40)
        whole = access.window(position, a + b)
        assert access.window(position, a) + access.window(position + a, b) == whole


def test_window_never_contains_adjacent_zeros():
    rng = random.Random(6)
    positions = [rng.randrange(1, 10 ** 9) for _ in range(10)]
    positions += [(1 << 400) + rng.randrange(1000) for _ in range(5)]
    positions += [2 ** 2059 + rng.randrange(4000) for _ in range(5)]
    for position in positions:
        assert "00" not in access.window(position, 64).to01()


def test_window_matches_reference():
    text = ref_prefix(5_000)
    rng = random.Random(8)
    for _ in range(30):
        start = rng.randrange(1, 4_000)
        length = rng.randrange(1, 200)
        assert access.window(start, length).to01() == text[start - 1:start - 1 + length]


def test_window_caps_and_domain():
    with pytest.raises(CapExceededError):
        access.window(1, 2 ** 20 + 1)
    assert access.window(1, 40, cap=40).length == 40
    with pytest.raises(ValueError):
        access.window(0, 4)
    with pytest.raises(ValueError):
        access.window(5, 0)


def test_parse_position_accepts_the_grammar():
    assert access.parse_position("13") == 13
    assert access.parse_position("2^2059+2061") == 2 ** 2059 + 2061
    assert access.parse_position("2^136 + 138") == 2 ** 136 + 138
    assert access.parse_position(" 2^10+2^3+5 ") == 1024 + 8 + 5
    assert access.parse_position("2^20-1") == 2 ** 20 - 1
    assert access.parse_position("2^4") == 16


def test_parse_position_rejects_garbage():
    for bad in ["", "  ", "2^", "^3", "2**3", "x", "1++2", "+", "3+",
                "2^-3", "0x10", "1.5"]:
        with pytest.raises(access.PositionSyntaxError):
            access.parse_position(bad)
    # syntactically fine but not a position
    with pytest.raises(access.PositionSyntaxError):
        access.parse_position("5-8")
    with pytest.raises(access.PositionSyntaxError):
        access.parse_position("0")
