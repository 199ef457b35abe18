"""Hilbert functions of the quotients, both computation routes."""

import random

import pytest

from hexwlp.errors import ParameterError
from hexwlp.hilbert import h_vector, monomial_basis, twin_peaks
from hexwlp.params import AciParams, hex_stats


def test_monomial_basis_small_by_hand():
    p = AciParams(2, 2, 2, 1, 1, 1)
    # degree 1: x, y, z survive
    assert [tuple(m) for m in monomial_basis(p, 1)] == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    # degree 2: squares and xyz-free products die, leaving xy, xz, yz
    assert [tuple(m) for m in monomial_basis(p, 2)] == [(1, 1, 0), (1, 0, 1), (0, 1, 1)]
    assert monomial_basis(p, 3) == []


def test_monomial_basis_is_descending_lex():
    p = AciParams(4, 6, 6, 1, 1, 3)
    for d in range(0, 8):
        ms = [tuple(m) for m in monomial_basis(p, d)]
        assert ms == sorted(ms, reverse=True)


def test_h_vector_known_values():
    assert h_vector(AciParams(3, 3, 3, 1, 1, 1)).h == (1, 3, 6, 6, 3)
    assert h_vector(AciParams(5, 5, 3, 2, 2, 1)).h == (1, 3, 6, 9, 12, 12, 9, 4, 1)
    assert h_vector(AciParams(2, 2, 4, 1, 1, 2)).h == (1, 3, 4, 4, 2)


def test_multiplicity_is_h_sum():
    hd = h_vector(AciParams(5, 5, 3, 2, 2, 1))
    assert hd.multiplicity == sum(hd.h) == 57


def test_h_vector_starts_one_three():
    rng = random.Random(3)
    seen = 0
    while seen < 50:
        a, b, c = (rng.randint(2, 8) for _ in range(3))
        al, be, ga = (rng.randint(0, x - 1) for x in (a, b, c))
        try:
            p = AciParams(a, b, c, al, be, ga)
        except ParameterError:
            continue
        seen += 1
        hd = h_vector(p)
        assert hd.h[0] == 1
        assert hd.h[1] == 3
        assert all(v > 0 for v in hd.h)


def test_twin_peaks_on_hexagonal():
    p = AciParams(4, 6, 6, 1, 1, 3)
    s2, A, B, C, M = hex_stats(p)
    h_s, equal = twin_peaks(p)
    assert equal
    hd = h_vector(p)
    assert hd.h[s2 - 2] == hd.h[s2 - 1] == h_s == 17


def test_twin_peaks_value_counts_monomials():
    p = AciParams(3, 3, 3, 1, 1, 1)
    h_s, equal = twin_peaks(p)
    assert equal and h_s == len(monomial_basis(p, 2))


def test_peak_position_recorded():
    p = AciParams(4, 6, 6, 1, 1, 3)
    hd = h_vector(p)
    assert hd.s == 5  # s + 2 = 7
