"""Parameter validation, derived statistics, and puncture classification."""

import random
from fractions import Fraction

import pytest

from hexwlp.errors import ParameterError
from hexwlp.params import (
    PAIR_PERMUTATIONS,
    AciParams,
    ci_embed,
    classify_puncture,
    derive_stats,
    hex_stats,
    hexagon_to_params,
    socle_info,
)


def test_valid_params_roundtrip():
    p = AciParams(4, 6, 6, 1, 1, 3)
    assert p.as_tuple() == (4, 6, 6, 1, 1, 3)
    assert p.pure() == (4, 6, 6)
    assert p.mixed() == (1, 1, 3)
    assert p.triple_sum == 21


@pytest.mark.parametrize("bad", [
    (0, 2, 2, 0, 1, 1),    # pure exponent must be positive
    (2, 2, 2, 2, 1, 1),    # alpha >= a
    (2, 2, 2, 1, 1, 2),    # gamma >= c
    (2, 2, 2, -1, 1, 1),   # negative mixed exponent
    (3, 3, 3, 2, 0, 0),    # two mixed exponents zero
    (3, 3, 3, 0, 0, 0),    # all mixed exponents zero
])
def test_invalid_params_rejected(bad):
    with pytest.raises(ParameterError):
        AciParams(*bad)


def test_non_integer_rejected():
    with pytest.raises(ParameterError):
        AciParams(2.5, 2, 2, 1, 1, 1)


def test_one_zero_mixed_exponent_allowed():
    AciParams(2, 2, 3, 1, 1, 0)
    AciParams(1, 2, 3, 0, 1, 2)


def test_relabel_is_a_group_action():
    p = AciParams(4, 6, 7, 1, 2, 3)
    assert p.relabel((0, 1, 2)) == p
    q = p.relabel((2, 0, 1))
    assert q.pure() == (7, 4, 6)
    assert q.mixed() == (3, 1, 2)
    # every relabeling preserves the triple sum
    for perm in PAIR_PERMUTATIONS:
        assert p.relabel(perm).triple_sum == p.triple_sum


def test_derived_stats_fractional_and_integral():
    st = derive_stats(AciParams(2, 2, 2, 1, 1, 1))
    assert st.s_plus_2 == 3
    assert (st.A, st.B, st.C, st.M) == (1, 1, 1, 0)
    assert st.semistable and st.hexagonal

    st = derive_stats(AciParams(2, 2, 2, 1, 1, 0))
    assert st.s_plus_2 == Fraction(8, 3)
    assert not st.hexagonal


def test_stats_linear_relations():
    rng = random.Random(7)
    seen = 0
    while seen < 200:
        a, b, c = (rng.randint(1, 9) for _ in range(3))
        al, be, ga = (rng.randint(0, x - 1) for x in (a, b, c))
        try:
            p = AciParams(a, b, c, al, be, ga)
        except ParameterError:
            continue
        seen += 1
        st = derive_stats(p)
        assert st.A + st.B + st.C + st.M == st.s_plus_2
        assert st.A + st.B + st.C == al + be + ga
        assert 3 * st.s_plus_2 == p.triple_sum


def test_semistability_criterion_matches_glossary():
    # 0 <= M and each of A, B, C between 0 and the opposite mixed pair
    st = derive_stats(AciParams(3, 3, 3, 2, 2, 2))
    assert not st.semistable  # A = 1 > beta + gamma would not trip; M = -1 does
    assert st.M < 0

    st = derive_stats(AciParams(5, 5, 3, 2, 2, 1))
    assert st.semistable and st.hexagonal


def test_hex_stats_values_and_rejection():
    assert hex_stats(AciParams(4, 6, 6, 1, 1, 3)) == (7, 3, 1, 1, 2)
    with pytest.raises(ParameterError):
        hex_stats(AciParams(3, 3, 3, 2, 2, 2))
    with pytest.raises(ParameterError):
        hex_stats(AciParams(2, 2, 2, 1, 1, 0))


def test_socle_info_types_and_degrees():
    # mixed generator strictly inside: type 3 with three socle degrees
    soc = socle_info(AciParams(3, 3, 3, 1, 1, 1))
    assert soc.cm_type == 3
    assert soc.level
    assert len(soc.socle_degrees) == 3

    # one mixed exponent zero: type 2
    soc = socle_info(AciParams(2, 2, 3, 1, 1, 0))
    assert soc.cm_type == 2
    assert soc.level

    soc = socle_info(AciParams(5, 5, 3, 2, 2, 1))
    assert not soc.level
    assert soc.socle_degrees == (7, 7, 8)


def test_socle_degrees_match_h_vector_tail():
    # the largest socle degree is the last nonzero degree of the quotient
    from hexwlp.hilbert import h_vector

    rng = random.Random(11)
    seen = 0
    while seen < 60:
        a, b, c = (rng.randint(1, 7) for _ in range(3))
        al, be, ga = (rng.randint(0, x - 1) for x in (a, b, c))
        try:
            p = AciParams(a, b, c, al, be, ga)
        except ParameterError:
            continue
        seen += 1
        hd = h_vector(p)
        assert max(socle_info(p).socle_degrees) == len(hd.h) - 1


def test_gravity_central_iff_level_type_three():
    rng = random.Random(13)
    seen = 0
    while seen < 80:
        a, b, c = (rng.randint(2, 9) for _ in range(3))
        al, be, ga = (rng.randint(1, x - 1) for x in (a, b, c))
        try:
            p = AciParams(a, b, c, al, be, ga)
            hex_stats(p)
        except ParameterError:
            continue
        seen += 1
        pc = classify_puncture(p)
        soc = socle_info(p)
        assert pc.gravity_central == (soc.level and soc.cm_type == 3)
        if pc.gravity_central:
            assert a - al == b - be == c - ga == pc.gravity_t


def test_axis_central_examples():
    assert classify_puncture(AciParams(3, 3, 3, 1, 1, 1)).axis_central
    assert not classify_puncture(AciParams(4, 6, 6, 1, 1, 3)).axis_central


def test_classify_puncture_requires_type_three():
    with pytest.raises(ParameterError):
        classify_puncture(AciParams(2, 2, 3, 1, 1, 0))


def test_hexagon_to_params_inverts_hex_stats():
    rng = random.Random(17)
    seen = 0
    while seen < 100:
        A, B, C, M = (rng.randint(0, 5) for _ in range(4))
        al = rng.randint(0, 6)
        be = rng.randint(0, 6)
        try:
            p = hexagon_to_params(A, B, C, M, al, be)
        except ParameterError:
            continue
        seen += 1
        assert hex_stats(p) == (A + B + C + M, A, B, C, M)
        assert p.alpha == al and p.beta == be


def test_ci_embed_is_hexagonal_with_empty_puncture():
    p = ci_embed(4, 5, 5)
    st = derive_stats(p)
    assert st.hexagonal
    assert st.M == 0
    with pytest.raises(ParameterError):
        ci_embed(2, 3, 4)  # odd pure-power sum
