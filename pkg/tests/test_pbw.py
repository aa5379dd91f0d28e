from itertools import product
from math import comb

import pytest

from qmatrix_gsb.freealg import Generator, NCPoly, generators
from qmatrix_gsb.gsb import reduce
from qmatrix_gsb.pbw import (
    PBWWord,
    check_pattern_hypothesis,
    cumulative,
    enumerate_normal,
    gk_dimension_readout,
    hilbert,
    hilbert_closed_form,
    is_normal,
    quotient_dimension_bruteforce,
    reduced_span_rank,
    single_index_labels,
)
from qmatrix_gsb.qlaurent import QMode
from qmatrix_gsb.quantum_matrix import build_relations

G = Generator


def test_is_normal_examples():
    assert is_normal((G(2, 2), G(2, 1), G(1, 1)))
    assert not is_normal((G(1, 1), G(2, 2)))
    assert is_normal((G(2, 1), G(2, 1)))
    assert is_normal(())


@pytest.mark.parametrize("n, d, count", [(2, 0, 1), (2, 2, 10), (3, 3, 165), (2, 5, 56)])
def test_enumerate_normal_counts(n, d, count):
    words = enumerate_normal(n, d)
    assert len(words) == count == comb(n * n + d - 1, d)
    assert len({w.word for w in words}) == count
    assert all(is_normal(w.word) for w in words)


def test_empty_word_enumeration():
    assert [w.word for w in enumerate_normal(2, 0)] == [()]


def test_is_normal_iff_fixed_by_reduce(S2):
    for d in range(4):
        for w in product(generators(2), repeat=d):
            fixed = reduce(NCPoly.word(w), S2) == NCPoly.word(w)
            assert fixed == is_normal(w)


def test_pbw_word_exponents():
    w = PBWWord.from_exponents({G(1, 1): 2, G(2, 2): 1})
    assert w.word == (G(2, 2), G(1, 1), G(1, 1))
    assert w.exponents == {G(2, 2): 1, G(1, 1): 2}
    assert str(w) == "Z[2,2]*Z[1,1]^2"


def test_hilbert_examples():
    assert hilbert(2, 5).coefficients == (1, 4, 10, 20, 35, 56)
    assert hilbert(3, 3).coefficients == (1, 9, 45, 165)
    for n in (2, 3, 4):
        assert hilbert(n, 1).coefficients[1] == n * n
        assert list(hilbert(n, 4).coefficients) == hilbert_closed_form(n, 4)


def test_cumulative_dims():
    assert cumulative(hilbert(2, 3).coefficients) == [1, 5, 15, 35]
    assert [comb(4 + d, 4) for d in range(4)] == [1, 5, 15, 35]


def test_gk_readout():
    assert gk_dimension_readout(2, 5) == 4
    assert gk_dimension_readout(3, 10) == 9
    with pytest.raises(ValueError):
        gk_dimension_readout(2, 4)


@pytest.mark.parametrize("d", [0, 1, 2, 3])
def test_rank_oracles(S2, d):
    expected = comb(4 + d - 1, d)
    assert reduced_span_rank(S2, d) == expected
    assert quotient_dimension_bruteforce(S2, d) == expected


def test_rank_oracle_independent_of_q():
    for mode in (QMode.numeric(2), QMode.numeric(1)):
        S = build_relations(2, mode)
        assert [quotient_dimension_bruteforce(S, d) for d in range(4)] == [1, 4, 10, 20]


def test_pattern_hypothesis():
    check = check_pattern_hypothesis(build_relations(2))
    assert check.holds
    assert check.witness == (G(1, 1), G(1, 2), G(2, 1), G(2, 2))
    check3 = check_pattern_hypothesis(build_relations(3))
    assert check3.holds and check3.matches_generator_order()
    assert list(check3.witness) == generators(3)


def test_pattern_fails_when_a_relation_is_dropped(S2):
    broken = S2.without(S2.relations[2])
    assert not check_pattern_hypothesis(broken).holds


def test_single_index_labels():
    labels = single_index_labels(2)
    assert labels[0] == G(2, 2) and labels[-1] == G(1, 1)
    # a PBW word z_1^a1 ... z_N^aN reads in descending generator order
    assert is_normal(tuple(labels))
