import pytest

from brikseq import runs
from brikseq.errors import RepresentationLimitError

from reference import ref_prefix


def test_run_start_examples():
    assert runs.run_start(1).start == 1
    assert runs.run_start(2).start == 5
    assert runs.run_start(3).start == 13
    assert runs.run_start(4).start == 2061
    assert runs.run_start(5).start == 2 ** 2059 + 2061


def test_run_record_fields():
    record = runs.run_start(4)
    assert record.n == 4 and record.exact


def test_run_start_recursion_shape():
    for n in (2, 3, 4):
        here, nxt = runs.run_start(n).start, runs.run_start(n + 1).start
        assert nxt == (1 << (here - 2)) + here


def test_run_start_limits():
    with pytest.raises(ValueError):
        runs.run_start(0)
    with pytest.raises(RepresentationLimitError) as info:
        runs.run_start(6)
    assert "2^2059" in str(info.value)


def test_monotonicity():
    starts = [runs.run_start(n).start for n in range(1, 6)]
    assert starts == sorted(starts) and len(set(starts)) == 5


def test_verify_run_all_exact_records():
    for n in range(1, 6):
        assert runs.verify_run(n), n


def test_scan_first_run_examples():
    assert runs.scan_first_run(2, 100) == 5
    assert runs.scan_first_run(4, 10 ** 4) == 2061
    assert runs.scan_first_run(5, 10 ** 6) is None
    assert runs.scan_first_run(3, 2) is None  # cutoff shorter than the run


def test_scan_matches_reference():
    text = ref_prefix(10 ** 4)
    for n in range(1, 5):
        expected = text.find("1" * n) + 1
        assert runs.scan_first_run(n, 10 ** 4) == expected == runs.run_start(n).start


def test_tetration_values():
    assert runs.tetration(0) == 1
    assert runs.tetration(1) == 2
    assert runs.tetration(3) == 16
    assert runs.tetration(4) == 65536
    assert runs.tetration(5) == 1 << 65536


def test_tetration_limits():
    with pytest.raises(ValueError):
        runs.tetration(-1)
    with pytest.raises(RepresentationLimitError):
        runs.tetration(6)


def test_tetration_bound_holds():
    assert runs.check_tetration_bound(3)   # 13 >= 16/2... 13 >= 7
    assert runs.check_tetration_bound(4)   # 2061 >= 19
    assert runs.check_tetration_bound(5)   # 2^2059+2061 >= 65539
    # the n = 2 case holds with equality and is accepted
    assert runs.check_tetration_bound(2)
    assert runs.run_start(2).start == runs.tetration(1) + 3


def test_tetration_bound_domain():
    with pytest.raises(ValueError):
        runs.check_tetration_bound(1)
    with pytest.raises(ValueError):
        runs.check_tetration_bound(6)
