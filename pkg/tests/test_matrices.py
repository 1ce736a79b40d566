import random

import pytest
from hypothesis import given, settings, strategies as st

from sympcp.matrices import (
    EPS2, L, Mat3, NotInImage, StringPair, Tag, beta, build_matrices, index_code, EncodingParams,
    mat_product, matrix_to_pair, pair_product, pair_to_matrix, phi4, table_pairs, verify_embedding,
)
from sympcp.words import BINARY, QUATERNARY, PcpInstance
from conftest import binary_words, quaternary_words, random_instance


def test_valuations_little_endian():
    assert beta(BINARY.word("011")) == 6
    assert beta(BINARY.word("")) == 0
    assert phi4(QUATERNARY.word("220")) == 10
    assert phi4(QUATERNARY.word("3")) == 3


@given(binary_words, quaternary_words)
def test_valuation_oracle(w, J):
    # int() over the reversed numeral is an independent little-endian reader
    assert beta(BINARY.word(w)) == int(w[::-1] or "0", 2)
    assert phi4(QUATERNARY.word(J)) == int(J[::-1] or "0", 4)


def test_pair_to_matrix_example():
    m = pair_to_matrix(StringPair.parse("00", "20"))
    assert m.rows == ((4, 0, 0), (0, 1, 0), (0, 2, 16))
    assert pair_to_matrix(StringPair.parse("", "2")) == L


def test_matrix_to_pair_rejects():
    for rows in (
        ((3, 0, 0), (0, 1, 0), (0, 0, 1)),   # not a power of 2
        ((2, 0, 0), (0, 1, 0), (0, 0, 2)),   # not a power of 4
        ((2, 2, 0), (0, 1, 0), (0, 0, 1)),   # beta too large
        ((1, 0, 0), (0, 1, 0), (0, 1, 1)),   # phi too large
        ((1, 0, 1), (0, 1, 0), (0, 0, 1)),   # pattern
    ):
        with pytest.raises(NotInImage):
            matrix_to_pair(Mat3(rows))


def test_index_codes():
    p = EncodingParams.for_pairs(1)
    assert p.h == 1 and str(index_code(0, p)) == "0"
    p = EncodingParams.for_pairs(5)
    assert p.h == 3 and [str(index_code(i, p)) for i in (1, 4)] == ["001", "100"]
    with pytest.raises(IndexError):
        index_code(5, p)


def test_table_pairs_counterexample(counterexample):
    t = table_pairs(counterexample)
    assert [str(p) for p in t.values()] == ["(ε,2)", "(00,20)", "(00,203)", "(0,02)", "(0,03)"]


def test_build_matrices_match_table():
    rng = random.Random(3)
    for _ in range(20):
        inst = random_instance(rng, k_max=5)
        mats = build_matrices(inst)
        for tag, pair in table_pairs(inst).items():
            assert mats.by_tag(tag) == pair_to_matrix(pair), tag


def test_fixed_product(closure):
    m = build_matrices(closure)
    want = ((8, 0, 0), (0, 1, 0), (0, 866, 1024))
    assert (m.U[0] @ m.Ubar[1]).rows == want
    assert mat_product([m.L, m.V[0], m.Vbar[1]]).rows == want


def test_tag_parse():
    assert Tag.parse("eps2") == EPS2
    assert Tag.parse("vbar:3") == Tag("vbar", 3)
    assert str(Tag("u", 0)) == "u:0"
    with pytest.raises(ValueError):
        Tag.parse("w:1")


@settings(max_examples=300)
@given(st.lists(st.tuples(binary_words, quaternary_words), min_size=1, max_size=5))
def test_homomorphism(pairs):
    ps = [StringPair.parse(w, J) for w, J in pairs]
    assert mat_product([pair_to_matrix(p) for p in ps]) == pair_to_matrix(pair_product(ps))


@given(binary_words, quaternary_words)
def test_decode_encode(w, J):
    p = StringPair.parse(w, J)
    assert matrix_to_pair(pair_to_matrix(p)) == p


def test_verify_embedding(closure):
    assert verify_embedding(closure, trials=300, seed=5).passed
