"""Monomial bases and Hilbert functions of the quotient ring.

The h-vector is computed twice, by direct monomial counting and from the
known graded free resolution; a mismatch is a fatal internal defect, never
a recoverable condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import InternalCheckError
from .params import AciParams, derive_stats, hex_stats, socle_info


class Monomial(NamedTuple):
    i: int
    j: int
    k: int

    @property
    def degree(self):
        return self.i + self.j + self.k

    def divides(self, other: "Monomial") -> bool:
        return self.i <= other.i and self.j <= other.j and self.k <= other.k


def in_quotient_basis(p: AciParams, m: Monomial) -> bool:
    """True when x^i y^j z^k survives in R/I."""
    if m.i >= p.a or m.j >= p.b or m.k >= p.c:
        return False
    return not (m.i >= p.alpha and m.j >= p.beta and m.k >= p.gamma)


def monomial_basis(p: AciParams, d: int):
    """Monomial basis of [R/I]_d, lex ordered with x > y > z (largest first)."""
    out = []
    for i in range(min(d, p.a - 1), -1, -1):
        for j in range(min(d - i, p.b - 1), -1, -1):
            k = d - i - j
            m = Monomial(i, j, k)
            if in_quotient_basis(p, m):
                out.append(m)
    return out


@dataclass(frozen=True)
class HilbertData:
    h: tuple
    s: int | None          # peak index, hexagonal case only
    multiplicity: int


def _binom2(m: int) -> int:
    return m * (m - 1) // 2 if m >= 2 else 0


def _resolution_h(p: AciParams, d: int) -> int:
    """dim [R/I]_d via the alternating sum over the resolution's twists.

    The shift pattern assumes the mixed exponents sorted ascending, so the
    pairs are relabeled first; n copies of the b+c / alpha+b+c twists appear
    only in the length-3 (all mixed exponents positive) case.
    """
    pairs = sorted(zip(p.mixed(), p.pure()))
    (al, a), (be, b), (ga, c) = pairs
    n = socle_info(p).resolution_n
    minus1 = [al + be + ga, a, b, c]
    plus2 = [a + be + ga, al + b + ga, al + be + c, a + b, a + c] + [b + c] * n
    minus3 = [a + b + ga, a + be + c] + [al + b + c] * n
    total = _binom2(d + 2)
    total -= sum(_binom2(d - t + 2) for t in minus1)
    total += sum(_binom2(d - t + 2) for t in plus2)
    total -= sum(_binom2(d - t + 2) for t in minus3)
    return total


def h_vector(p: AciParams) -> HilbertData:
    """h-vector of R/I, cross-checked against the resolution route."""
    counted = []
    d = 0
    while True:
        hd = len(monomial_basis(p, d))
        if hd == 0:
            break
        counted.append(hd)
        d += 1

    top = max(socle_info(p).socle_degrees)
    if len(counted) != top + 1:
        raise InternalCheckError(
            f"h-vector of {p.as_tuple()} ends at degree {len(counted) - 1}, "
            f"socle says {top}"
        )
    for e in range(top + 2):
        expect = counted[e] if e <= top else 0
        got = _resolution_h(p, e)
        if got != expect:
            raise InternalCheckError(
                f"h-vector mismatch for {p.as_tuple()} at degree {e}: "
                f"counted {expect}, resolution gives {got}"
            )

    st = derive_stats(p)
    s = int(st.s_plus_2) - 2 if st.hexagonal else None
    return HilbertData(h=tuple(counted), s=s, multiplicity=sum(counted))


def twin_peaks(p: AciParams):
    """(h_s, h_s == h_{s+1}) for hexagonal parameters.

    Equality of the two peaks is a theorem here, as is s+1 being at most
    every socle degree; violations raise InternalCheckError.
    """
    s2, A, B, C, M = hex_stats(p)
    s = s2 - 2
    data = h_vector(p)
    hs, hs1 = data.h[s], data.h[s + 1]
    equal = hs == hs1
    if not equal or (s2 - (A + B + C + M)) != 0:
        raise InternalCheckError(f"twin peak identity failed for {p.as_tuple()}")
    if any(s + 1 > e for e in socle_info(p).socle_degrees):
        raise InternalCheckError(f"s+1 exceeds a socle degree for {p.as_tuple()}")
    return hs, equal
