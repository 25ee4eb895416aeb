import pytest

from oraclekit.errors import (
    BoundsError,
    DimensionError,
    OrderError,
    ZeroEntryError,
)
from oraclekit.propcheck import GenConfig, gen_coo
from oraclekit.spmv import (
    INT64_MAX,
    INT64_MIN,
    coo_from_text,
    coo_from_triplets,
    coo_to_text,
    dense_from_rows,
    from_dense,
    multiply_seq,
    oracle_multiply_dense,
    to_dense,
)

PINNED_TRIPLETS = [(1, 3, 1), (2, 1, 5), (2, 2, 8), (4, 2, 3)]
PINNED_ROWS = [
    [0, 0, 1, 0],
    [5, 8, 0, 0],
    [0, 0, 0, 0],
    [0, 3, 0, 0],
]


def pinned_matrix():
    return coo_from_triplets(4, 4, PINNED_TRIPLETS)


def test_pinned_decode_encode():
    m = pinned_matrix()
    d = dense_from_rows(PINNED_ROWS)
    assert to_dense(m) == d
    assert from_dense(d) == m
    assert m.to_triplets() == PINNED_TRIPLETS


def test_pinned_products():
    m = pinned_matrix()
    assert multiply_seq([1, 1, 1, 1], m) == [5, 11, 1, 0]
    assert multiply_seq([1, 0, 0, 0], m) == [0, 0, 1, 0]


def test_empty_matrix_multiplies_to_zero():
    m = coo_from_triplets(3, 2, [])
    assert multiply_seq([7, 8, 9], m) == [0, 0]


def test_construction_validation():
    with pytest.raises(DimensionError):
        coo_from_triplets(0, 1, [])
    with pytest.raises(BoundsError):
        coo_from_triplets(2, 2, [(3, 1, 5)])
    with pytest.raises(BoundsError):
        coo_from_triplets(2, 2, [(1, 0, 5)])
    with pytest.raises(ZeroEntryError):
        coo_from_triplets(2, 2, [(1, 1, 0)])
    with pytest.raises(OrderError):
        coo_from_triplets(2, 2, [(1, 2, 1), (1, 1, 1)])
    with pytest.raises(OrderError):
        coo_from_triplets(2, 2, [(1, 1, 1), (1, 1, 2)])  # duplicate cell
    with pytest.raises(OverflowError):
        coo_from_triplets(1, 1, [(1, 1, 1 << 63)])


def test_multiply_validation():
    m = pinned_matrix()
    with pytest.raises(DimensionError):
        multiply_seq([1, 1], m)
    big = coo_from_triplets(1, 1, [(1, 1, INT64_MAX)])
    with pytest.raises(OverflowError):
        multiply_seq([2], big)
    # a single in-range product is fine
    assert multiply_seq([1], big) == [INT64_MAX]
    two = coo_from_triplets(2, 1, [(1, 1, INT64_MAX), (2, 1, 1)])
    with pytest.raises(OverflowError):
        multiply_seq([1, 1], two)  # the accumulated sum overflows
    assert multiply_seq([1, 0], two) == [INT64_MAX]


def test_dense_validation():
    with pytest.raises(DimensionError):
        dense_from_rows([])
    with pytest.raises(DimensionError):
        dense_from_rows([[1, 2], [3]])
    with pytest.raises(OverflowError):
        dense_from_rows([[INT64_MIN - 1]])


def test_text_round_trip():
    m = pinned_matrix()
    text = coo_to_text(m)
    assert text == "4 4 4\n1 3 1\n2 1 5\n2 2 8\n4 2 3\n"
    assert coo_from_text(text) == m
    # arbitrary whitespace is fine
    assert coo_from_text("4  4 4\n\n 1 3 1\n2 1 5\n2 2 8\n\t4 2 3\n") == m


def test_text_parse_errors():
    with pytest.raises(OrderError):
        coo_from_text("")
    with pytest.raises(OrderError):
        coo_from_text("2 2")
    with pytest.raises(OrderError):
        coo_from_text("2 2 one\n")
    with pytest.raises(OrderError):
        coo_from_text("2 2 -1\n")
    with pytest.raises(OrderError):
        coo_from_text("2 2 2\n1 1 5\n")  # body shorter than header claims
    with pytest.raises(OrderError):
        coo_from_text("2 2 1\n1 1 5\n2 2 7\n")  # body longer than header claims
    with pytest.raises(OrderError):
        coo_from_text("2 2 1\n1 1 5 9\n")


def test_matches_dense_oracle_on_generated_cases():
    cfg = GenConfig(seed=11, max_len=30, cases=300)
    for i in range(cfg.cases):
        x, m = gen_coo(cfg, i)
        assert multiply_seq(x, m) == oracle_multiply_dense(x, to_dense(m))


def test_triplets_survive_text_round_trip_generated():
    cfg = GenConfig(seed=12, max_len=30, cases=100)
    for i in range(cfg.cases):
        _, m = gen_coo(cfg, i)
        assert coo_from_text(coo_to_text(m)) == m
