"""Divisibility and binomial matrices, and the lattice-path counts."""

from math import comb

import pytest

from hexwlp.errors import ParameterError
from hexwlp.hilbert import monomial_basis
from hexwlp.linalg import det_exact
from hexwlp.matrices import (
    IntMatrix,
    LatticePoint,
    build_N,
    build_Z,
    lattice_path_count,
    nilp_endpoints,
    path_count_matrix,
)
from hexwlp.params import AciParams, hex_stats


def test_int_matrix_basics():
    m = IntMatrix.from_rows([[1, 2], [3, 4]])
    assert m.nrows == m.ncols == 2
    assert m.is_square()
    assert m[0, 1] == 2 and m[1, 0] == 3
    assert m.to_decimal_rows() == [["1", "2"], ["3", "4"]]
    with pytest.raises(ParameterError):
        IntMatrix.from_rows([[1, 2], [3]])


def test_Z_is_divisibility_on_peak_bases():
    p = AciParams(4, 6, 6, 1, 1, 3)
    s2 = hex_stats(p)[0]
    rows = monomial_basis(p, s2 - 2)
    cols = monomial_basis(p, s2 - 1)
    z = build_Z(p)
    assert z.nrows == len(rows) and z.ncols == len(cols)
    for i, m in enumerate(rows):
        for j, w in enumerate(cols):
            divides = m.i <= w.i and m.j <= w.j and m.k <= w.k
            assert z[i, j] == (1 if divides else 0)


def test_Z_rejects_non_hexagonal():
    with pytest.raises(ParameterError):
        build_Z(AciParams(3, 3, 3, 2, 2, 2))


def test_N_entries_are_the_two_binomial_bands():
    p = AciParams(4, 6, 6, 1, 1, 3)
    s2, A, B, C, M = hex_stats(p)
    n = build_N(p)
    assert n.nrows == n.ncols == C + M
    for i in range(1, C + M + 1):
        for j in range(1, C + M + 1):
            if i <= C:
                k = A + j - i
                want = comb(p.c, k) if 0 <= k <= p.c else 0
            else:
                k = A + C - p.beta + j - i
                want = comb(p.gamma, k) if 0 <= k <= p.gamma else 0
            assert n[i - 1, j - 1] == want


def test_N_one_by_one_case():
    # C = 0, M = 1 gives the single entry binom(gamma, A - beta)
    p = AciParams(4, 3, 6, 0, 1, 4)
    s2, A, B, C, M = hex_stats(p)
    assert (C, M) == (0, 1)
    n = build_N(p)
    assert n.nrows == 1
    assert n[0, 0] == comb(p.gamma, A - p.beta) == 4


def test_lattice_path_count_is_binomial():
    # right/down monotone paths
    assert lattice_path_count(LatticePoint(0, 4), LatticePoint(3, 0)) == comb(7, 3)
    assert lattice_path_count(LatticePoint(2, 5), LatticePoint(2, 5)) == 1
    # unreachable: would need a left or up step
    assert lattice_path_count(LatticePoint(1, 0), LatticePoint(0, 0)) == 0
    assert lattice_path_count(LatticePoint(0, 0), LatticePoint(1, 2)) == 0


def test_path_count_matrix_det_matches_N_det():
    # Lindstrom-Gessel-Viennot: both matrices enumerate the same families
    for t in [(2, 2, 2, 1, 1, 1), (4, 6, 6, 1, 1, 3), (3, 3, 6, 1, 1, 4)]:
        p = AciParams(*t)
        dn = det_exact(build_N(p))
        dp = det_exact(path_count_matrix(p))
        assert abs(dn) == abs(dp)


def test_path_count_matrix_entries_are_path_counts():
    p = AciParams(4, 6, 6, 1, 1, 3)
    starts, ends = nilp_endpoints(p)
    m = path_count_matrix(p)
    for i, a in enumerate(starts):
        for j, e in enumerate(ends):
            assert m[i, j] == lattice_path_count(a, e)


def test_endpoints_counts():
    p = AciParams(4, 6, 6, 1, 1, 3)
    s2, A, B, C, M = hex_stats(p)
    starts, ends = nilp_endpoints(p)
    assert len(starts) == len(ends) == C + M
