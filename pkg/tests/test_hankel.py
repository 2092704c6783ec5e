import random

import pytest

from hankelforge import prefix
from hankelforge.hankel import (
    IntegerMatrix,
    all_minors_nonneg,
    build_hankel,
    det,
    det_bareiss,
    det_dodgson,
    det_laplace,
    leading_principal_minors,
    quotient_check,
)
from hankelforge.sequences import APERY_A, APERY_B, domb, franel

from oracle_helpers import det_fractions, det_permutation


def _m(rows, **kw):
    return IntegerMatrix.from_rows(rows, **kw)


def test_matrix_validation():
    with pytest.raises(ValueError):
        IntegerMatrix(0, ())
    with pytest.raises(ValueError):
        _m([[1, 2], [3, 4], [5, 6]])
    with pytest.raises(ValueError):
        _m([[1, 2], [3]])
    with pytest.raises(ValueError):
        _m([[1.5]])
    with pytest.raises(ValueError):
        _m([[1, 2], [3, 4]], hankel=True)  # entry (1,0) != entry (0,1)
    assert _m([[1, 2], [2, 5]], hankel=True).order == 2


def test_build_hankel_examples():
    f = prefix(franel(3), 4)
    assert build_hankel(f, 1).entries == ((1, 2), (2, 10))
    assert build_hankel(f, 0).entries == ((1,),)
    d = prefix(domb(2), 2)
    assert build_hankel(d, 1).entries == ((1, 4), (4, 28))
    assert build_hankel([5, 6, 7], 1).entries == ((5, 6), (6, 7))


def test_build_hankel_insufficient_terms():
    with pytest.raises(ValueError):
        build_hankel([1, 2], 1)
    with pytest.raises(ValueError):
        build_hankel(prefix(franel(3), 3), 2)


def test_laplace_examples():
    assert det_laplace(_m([[1, 2], [2, 10]])).value == 6
    assert det_laplace(_m([[1]])).value == 1
    assert det_laplace(_m([[1, 2, 10], [2, 10, 56], [10, 56, 346]])).value == 180


def test_laplace_cap():
    big = _m([[1 if i == j else 0 for j in range(11)] for i in range(11)])
    with pytest.raises(ValueError):
        det_laplace(big)
    assert det_laplace(big, max_order=11).value == 1


def test_bareiss_examples():
    assert det_bareiss(_m([[1, 4], [4, 28]])).value == 12
    eye5 = _m([[1 if i == j else 0 for j in range(5)] for i in range(5)])
    assert det_bareiss(eye5).value == 1
    assert det_bareiss(_m([[1, 5], [5, 73]])).value == 48


def test_dodgson_examples():
    assert det_dodgson(_m([[1, 2, 10], [2, 10, 56], [10, 56, 346]])).value == 180
    assert det_dodgson(_m([[1]])).value == 1
    assert det_dodgson(_m([[1, 3], [3, 19]])).value == 10


def test_dodgson_zero_pivot_falls_back():
    rows = [[1, 2, 3], [4, 0, 6], [7, 8, 9]]
    result = det_dodgson(_m(rows))
    assert result.fallback
    assert result.algorithm == "DODGSON"
    assert result.value == det_fractions(rows) == 60


def test_dodgson_no_fallback_when_interior_nonzero():
    result = det_dodgson(_m([[1, 2, 10], [2, 10, 56], [10, 56, 346]]))
    assert not result.fallback


def test_engines_agree_on_random_matrices():
    rng = random.Random(42)
    for trial in range(60):
        order = rng.randint(1, 7)
        rows = [[rng.randint(-99, 99) for _ in range(order)] for _ in range(order)]
        if trial % 7 == 0 and order > 1:
            rows[order // 2] = [0] * order  # force singular cases
        expected = det_fractions(rows)
        matrix = _m(rows)
        assert det_laplace(matrix).value == expected
        assert det_bareiss(matrix).value == expected
        assert det_dodgson(matrix).value == expected
        if order <= 5:
            assert det_permutation(rows) == expected


def test_default_engine_dispatch():
    small = _m([[2, 0], [0, 3]])
    assert det(small).algorithm == "LAPLACE"
    big = build_hankel(prefix(franel(3), 10), 5)
    assert det(big).algorithm == "BAREISS"
    assert det(big).value == det_fractions(big.rows())


def test_leading_principal_minors():
    matrix = build_hankel(prefix(APERY_B, 12), 6)
    minors = leading_principal_minors(matrix)
    assert len(minors) == 7
    for size in range(1, 8):
        assert minors[size - 1] == det_bareiss(matrix.leading_block(size)).value


def test_leading_principal_minors_zero_pivot_path():
    rows = [[0, 1, 2], [1, 0, 3], [2, 3, 0]]
    minors = leading_principal_minors(_m(rows))
    assert minors == [0, -1, det_fractions(rows)]


def test_quotient_check_examples():
    q = quotient_check(180, 6, 2)
    assert (q.quotient, q.is_integer, q.is_odd, q.is_positive) == (5, True, True, True)
    q = quotient_check(16, 2, 4)
    assert (q.quotient, q.is_integer, q.is_odd, q.is_positive) == (1, True, True, True)
    assert quotient_check(1, 6, 0).quotient == 1
    q = quotient_check(10, 4, 1)
    assert not q.is_integer and q.quotient is None
    q = quotient_check(-24, 2, 3)
    assert q.quotient == -3 and q.is_odd and not q.is_positive


def test_quotient_check_validation():
    with pytest.raises(ValueError):
        quotient_check(10, 1, 2)
    with pytest.raises(ValueError):
        quotient_check(10, 2, -1)


def test_all_minors_nonneg_examples():
    f = build_hankel(prefix(franel(3), 4), 2)
    ok, violation = all_minors_nonneg(f, 3)
    assert ok and violation is None
    d = build_hankel(prefix(domb(2), 4), 2)
    assert all_minors_nonneg(d, 3) == (True, None)
    ok, violation = all_minors_nonneg(_m([[0, 1], [1, 0]]), 2)
    assert not ok
    assert (violation.rows, violation.cols, violation.value) == ((0, 1), (0, 1), -1)


def test_all_minors_first_violation_is_lexicographic():
    ok, violation = all_minors_nonneg(_m([[5, -2], [-3, 1]]), 2)
    assert not ok
    # the size-1 minor at (0,1) comes before (1,0) and before the full det
    assert (violation.rows, violation.cols, violation.value) == ((0,), (1,), -2)


def test_all_minors_max_order_validation():
    matrix = _m([[1, 0], [0, 1]])
    with pytest.raises(ValueError):
        all_minors_nonneg(matrix, 3)
    with pytest.raises(ValueError):
        all_minors_nonneg(matrix, 0)


def test_antidiagonal_two_power_scaling():
    # scaling terms by 2^index multiplies the order-(n+1) det by 2^(n(n+1))
    for seq in (franel(3), domb(2), APERY_A):
        terms = prefix(seq, 16).terms
        scaled = [t << i for i, t in enumerate(terms)]
        for n in range(9):
            base = det(build_hankel(terms, n)).value
            assert det(build_hankel(scaled, n)).value == 2 ** (n * (n + 1)) * base


def test_instrumentation_is_populated():
    matrix = build_hankel(prefix(franel(3), 12), 6)
    result = det_bareiss(matrix)
    assert result.steps > 0
    assert result.max_bits >= result.value.bit_length()
