from fractions import Fraction

import numpy as np
import pytest

from hfbound.bounds import hf_lower_1
from hfbound.codes import (
    HfCode,
    code_sphere_stats,
    dump_code,
    greedy_construct,
    load_code,
    min_distance,
    random_code,
    read_code,
    verify_code,
    write_code,
)
from hfbound.core import enumerate_hf
from hfbound.errors import BadParameters, EmptyDistance, LengthMismatch

EXAMPLE = [(0, 1, 0, 2), (1, 2, 1, 2), (1, 0, 2, 0)]


def test_min_distance_examples():
    assert min_distance(HfCode.from_symbols(EXAMPLE, 3)) == 3
    assert min_distance(HfCode(tuple(enumerate_hf(4, 2)))) == 1
    assert min_distance(HfCode.from_symbols([(0, 1, 0, 1, 0), (1, 0, 1, 0, 1)], 2)) == 5
    with pytest.raises(EmptyDistance):
        min_distance(HfCode.from_symbols([(0, 1)], 3))


def test_code_invariants():
    with pytest.raises(BadParameters):
        HfCode.from_symbols([(0, 1), (0, 1)], 3)
    with pytest.raises(LengthMismatch):
        HfCode.from_symbols([(0, 1), (0, 1, 0)], 3)


def test_stats_whole_space():
    st = code_sphere_stats(HfCode(tuple(enumerate_hf(4, 5))), 2)
    assert (st.w_min, st.w_max, st.u_bar) == (37, 47, Fraction(41))
    assert st.c_min.symbols == (0, 1, 2, 0, 1)


def test_stats_singleton_and_example():
    st = code_sphere_stats(HfCode.from_symbols([(0, 1, 2)], 4), 1)
    assert st.w_min == st.w_max == st.u_bar
    st = code_sphere_stats(HfCode.from_symbols(EXAMPLE, 3), 1)
    assert st.w_min <= st.u_bar <= st.w_max


def test_greedy_examples():
    assert len(greedy_construct(4, 5, 3)) >= 7
    assert len(greedy_construct(4, 3, 1)) == 36
    code = greedy_construct(3, 4, 3)
    assert len(code) >= 3 and min_distance(code) >= 3


def test_greedy_seeded_is_deterministic():
    a = greedy_construct(4, 5, 3, order="seeded-shuffle", seed=7)
    b = greedy_construct(4, 5, 3, order="seeded-shuffle", seed=7)
    assert a == b and min_distance(a) >= 3
    assert len(a) >= hf_lower_1(4, 5, 3).value


def test_verify_example_code():
    assert verify_code(EXAMPLE, 4, 3, 3, 3).accepted
    rep = verify_code(EXAMPLE, 4, 3, 4, 3)
    assert not rep.accepted and rep.measured_d == 3
    assert "witness" in rep.violations[0]
    assert rep.witness == (0, 1)


def test_verify_flags_repeat_and_size():
    rep = verify_code([(0, 1, 1, 2), (1, 2, 1, 2)], 4, 3, 3, 3)
    assert not rep.accepted
    text = rep.summary()
    assert "RepeatAt" in text and "size" in text


def test_code_file_round_trip(tmp_path):
    code = greedy_construct(4, 4, 3)
    path = tmp_path / "code.txt"
    write_code(code, path, dna=True)
    assert path.read_text().splitlines()[0] == "# q=4 n=4"
    assert read_code(path) == code
    assert load_code(dump_code(code)) == code


def test_random_code_size():
    rng = np.random.default_rng(1)
    assert len(random_code(4, 4, 10, rng)) == 10
