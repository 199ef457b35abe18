"""Exact determinants, permanents, factoring, and the WLP verdicts."""

import random
from itertools import permutations

import pytest

from hexwlp.errors import ParameterError
from hexwlp.linalg import (
    det_exact,
    factor_integer,
    forced_failure_primes,
    is_certified_prime,
    matrix_rank_exact,
    matrix_rank_mod,
    permanent_exact,
    primes_up_to,
    wlp_report,
)
from hexwlp.matrices import IntMatrix, build_N
from hexwlp.params import AciParams


def _slow_det(m):
    n = m.nrows
    out = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):  # count inversions
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = sign
        for i in range(n):
            term *= m[i, perm[i]]
        out += term
    return out


def _slow_perm(m):
    n = m.nrows
    out = 0
    for perm in permutations(range(n)):
        term = 1
        for i in range(n):
            term *= m[i, perm[i]]
        out += term
    return out


def test_det_against_permutation_expansion():
    rng = random.Random(23)
    for _ in range(40):
        n = rng.randint(1, 5)
        m = IntMatrix.from_rows(
            [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
        )
        assert det_exact(m) == _slow_det(m)


def test_det_empty_and_identity():
    assert det_exact(IntMatrix(())) == 1
    assert det_exact(IntMatrix.from_rows([[1, 0], [0, 1]])) == 1


def test_det_requires_square():
    with pytest.raises(ParameterError):
        det_exact(IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]]))


def test_permanent_against_expansion():
    rng = random.Random(29)
    for _ in range(30):
        n = rng.randint(1, 5)
        m = IntMatrix.from_rows(
            [[rng.randint(0, 3) for _ in range(n)] for _ in range(n)]
        )
        assert permanent_exact(m) == _slow_perm(m)


def test_permanent_cap_returns_none():
    m = IntMatrix.from_rows([[1] * 6 for _ in range(6)])
    assert permanent_exact(m, size_cap=5) is None
    assert permanent_exact(m, size_cap=6) == 720


def test_primes_helpers():
    assert primes_up_to(20) == [2, 3, 5, 7, 11, 13, 17, 19]
    assert is_certified_prime(2) and is_certified_prime(20554657)
    assert not is_certified_prime(1)
    assert not is_certified_prime(20554657 * 3)


def test_factor_integer_roundtrip():
    rng = random.Random(31)
    for _ in range(40):
        v = rng.randint(-10**9, 10**9)
        f = factor_integer(v)
        if v == 0:
            assert f.sign == 0
            continue
        assert f.value() == v
        assert f.cofactor is None
        assert all(is_certified_prime(q) for q, _ in f.factors)
        assert list(f.factors) == sorted(f.factors)


def test_factor_large_example():
    v = 2 * 3**2 * 5**3 * 7 * 11 * 17**2 * 19**6 * 23**5 * 20554657
    f = factor_integer(v)
    assert f.factors == ((2, 1), (3, 2), (5, 3), (7, 1), (11, 1), (17, 2),
                         (19, 6), (23, 5), (20554657, 1))


def test_forced_primes_divide_det():
    # primes with a power inside [max(a,b,c), s+1] force failure
    p = AciParams(20, 20, 20, 3, 8, 13)
    forced = forced_failure_primes(p)
    assert forced == (3, 5, 23)
    d = det_exact(build_N(p))
    for q in forced:
        assert d % q == 0


def test_wlp_report_cross_checks():
    r = wlp_report(AciParams(4, 6, 6, 1, 1, 3))
    assert r.det_N == 11 and abs(r.det_Z) == 11
    assert r.wlp_char0 and not r.always_fails
    assert r.bad_primes == (11,)

    r = wlp_report(AciParams(5, 5, 3, 2, 2, 1))
    assert r.always_fails and r.det_N == 0


def test_rank_exact_and_mod():
    rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert matrix_rank_exact(rows) == 2
    # the doubled row is dependent in any characteristic
    assert matrix_rank_mod(rows, 5) == 2
    rows = [[2, 0], [0, 3]]
    assert matrix_rank_exact(rows) == 2
    assert matrix_rank_mod(rows, 3) == 1
    assert matrix_rank_mod(rows, 2) == 1
