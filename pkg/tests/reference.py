"""Independent plain-string reference implementation used as a test oracle.

Deliberately naive: words are Python strings and every value is recomputed
from the construction rule, so agreement with the bit-packed library is
meaningful. Golden constants live here too.
"""

SEED = "101"

# The first five construction stages, written out.
STAGE_TABLE = {
    1: "101",
    2: "10101",
    3: "10101101",
    4: "1010110101101",
    5: "1010110101101110101101",
}

# The displayed 72-symbol opening of the infinite sequence.
OPENING_72 = ("1010110101101110101101101011011101011010"
              "10110111010110110101101110101101")


def ref_block(i: int) -> str:
    word = SEED
    for k in range(1, i):
        word = word + word[k:]
    return word


def ref_prefix(n: int) -> str:
    word = SEED
    k = 1
    while len(word) < n:
        word = word + word[k:]
        k += 1
    return word[:n]


def ref_count_occurrences(pattern: str, text: str) -> int:
    count = 0
    at = text.find(pattern)
    while at >= 0:
        count += 1
        at = text.find(pattern, at + 1)
    return count
