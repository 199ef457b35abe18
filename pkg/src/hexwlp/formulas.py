"""Closed product formulas for punctured hexagon determinants.

Everything works over exact integers.  Ratios of hyperfactorials are
evaluated through prime exponent vectors, so no division ever happens;
a negative exponent means the expression was not an integer, which is
reported as an internal error instead of a wrong value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import InternalCheckError, ParameterError
from .linalg import det_exact, primes_up_to
from .matrices import IntMatrix, build_N
from .params import (
    PAIR_PERMUTATIONS,
    AciParams,
    classify_puncture,
    hex_stats,
    hexagon_to_params,
)

# ---------------------------------------------------------------------------
# hyperfactorials


def hyperfactorial(n: int) -> int:
    """H(n) = 0! * 1! * ... * (n-1)!."""
    if n < 0:
        raise ParameterError("hyperfactorial needs n >= 0, got %d" % n)
    out = 1
    fact = 1
    for i in range(1, n):
        fact *= i
        out *= fact
    return out


def hyper_even(n: int) -> int:
    """Product of the even parts 2 * 4 * ... * 2*floor(i/2) of i! for i < n."""
    if n < 0:
        raise ParameterError("hyper_even needs n >= 0, got %d" % n)
    out = 1
    for i in range(n):
        half = i // 2
        out *= 2**half * factorial(half)
    return out


def hyper_odd(n: int) -> int:
    """Product of the odd parts 1 * 3 * ... of i! for i < n."""
    if n < 0:
        raise ParameterError("hyper_odd needs n >= 0, got %d" % n)
    out = 1
    for i in range(n):
        part = 1
        for j in range(1, i + 1, 2):
            part *= j
        out *= part
    return out


def _hyper_exponent(p: int, n: int) -> int:
    """Exponent of the prime p in H(n)."""
    # sum over k of sum_{i<n} floor(i / p^k), each inner sum in closed form
    e = 0
    q = p
    while q < n:
        t, r = divmod(n - 1, q)
        e += q * t * (t - 1) // 2 + (r + 1) * t
        q *= p
    return e


class HyperRatio:
    """Accumulates a product of hyperfactorials H(n)**e, e of either sign.

    value() multiplies out through prime exponent vectors and insists the
    result is an integer.
    """

    def __init__(self):
        self._exp: dict[int, int] = {}

    def mul(self, n: int, e: int = 1) -> "HyperRatio":
        if n < 0:
            raise ParameterError("hyperfactorial of negative argument %d" % n)
        # H(0) = H(1) = H(2) = 1 contribute nothing
        if n > 2 and e:
            self._exp[n] = self._exp.get(n, 0) + e
            if not self._exp[n]:
                del self._exp[n]
        return self

    def div(self, n: int, e: int = 1) -> "HyperRatio":
        return self.mul(n, -e)

    def value(self) -> int:
        if not self._exp:
            return 1
        top = max(self._exp)
        out = 1
        for p in primes_up_to(top - 1):
            e = sum(c * _hyper_exponent(p, n) for n, c in self._exp.items())
            if e < 0:
                raise InternalCheckError(
                    "hyperfactorial ratio is not integral "
                    "(prime %d has exponent %d)" % (p, e)
                )
            out *= p**e
        return out


def _mac_into(hr: HyperRatio, x: int, y: int, z: int) -> None:
    hr.mul(x).mul(y).mul(z).mul(x + y + z)
    hr.div(x + y).div(x + z).div(y + z)


def mac(x: int, y: int, z: int) -> int:
    """Number of plane partitions in an x * y * z box (MacMahon's product)."""
    if min(x, y, z) < 0:
        raise ParameterError(
            "box sides must be nonnegative, got (%d, %d, %d)" % (x, y, z)
        )
    hr = HyperRatio()
    _mac_into(hr, x, y, z)
    return hr.value()


# ---------------------------------------------------------------------------
# the f polynomials and their even/odd parts


def f_factors(a: int, b: int) -> dict[int, int]:
    """Exponents of the linear factors (c + shift) of f_{a,b}(c), 0 <= a <= b.

    The exponents ramp up 1..a, stay at a through shift b, then ramp back
    down.  Zero exponents are dropped.
    """
    if not 0 <= a <= b:
        raise ParameterError("need 0 <= a <= b, got (%d, %d)" % (a, b))
    out: dict[int, int] = {}
    for i in range(1, a + 1):
        out[i] = i
    if a:
        for i in range(a + 1, b + 1):
            out[i] = a
    for i in range(1, a):
        out[b + i] = a - i
    return out


def f_value(a: int, b: int, c: int) -> int:
    """f_{a,b}(c) for an integer c >= 0."""
    if c < 0:
        raise ParameterError("need c >= 0, got %d" % c)
    out = 1
    for shift, e in f_factors(a, b).items():
        out *= (c + shift) ** e
    return out


def f_even_factors(a: int, b: int) -> dict[int, int]:
    """The factors of f_{a,b} with even shift."""
    return {s: e for s, e in f_factors(a, b).items() if s % 2 == 0}


def f_odd_factors(a: int, b: int) -> dict[int, int]:
    """The factors of f_{a,b} with odd shift."""
    return {s: e for s, e in f_factors(a, b).items() if s % 2 == 1}


def format_factors(factors: dict[int, int], var: str = "c") -> str:
    """Render {shift: exponent} as '(c+1)(c+2)^2...' in increasing shift order."""
    if not factors:
        return "1"
    parts = []
    for s in sorted(factors):
        e = factors[s]
        base = var if s == 0 else "(%s+%d)" % (var, s)
        parts.append(base if e == 1 else "%s^%d" % (base, e))
    return "".join(parts)


# ---------------------------------------------------------------------------
# determinants of split binomial matrices


def split_binom_matrix(p: int, q: int, r: int, m: int, n: int) -> IntMatrix:
    """n x n matrix of binomial coefficients of p; entry (i, j) has lower
    index q + j - i in the first m columns and q + r + j - i in the rest."""
    if n < 0 or not 0 <= m <= n:
        raise ParameterError("need 0 <= m <= n")
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            k = (q if j <= m else q + r) + j - i
            row.append(comb(p, k) if 0 <= k <= p else 0)
        rows.append(row)
    return IntMatrix.from_rows(rows) if n else IntMatrix(())


def split_binom_det(p: int, q: int, r: int, m: int, n: int) -> int:
    """Closed form for det(split_binom_matrix(p, q, r, m, n)).

    Needs 0 <= m <= n, 0 <= q, 0 <= r and q + r <= p.
    """
    if not 0 <= m <= n:
        raise ParameterError("need 0 <= m <= n, got m=%d n=%d" % (m, n))
    if q < 0 or r < 0 or q + r > p:
        raise ParameterError(
            "need 0 <= q, 0 <= r, q + r <= p, got p=%d q=%d r=%d" % (p, q, r)
        )
    hr = HyperRatio()
    _mac_into(hr, m, q, r)
    _mac_into(hr, n - m, p - q - r, r)
    hr.mul(q + r).mul(p - q).mul(n + r).mul(n + p)
    hr.div(n + p - q).div(n + q + r).div(p).div(r)
    return hr.value()


# ---------------------------------------------------------------------------
# closed determinant dispatch

CLOSED_DET_CASES = (
    "M_ZERO",
    "C_ZERO",
    "C_MAXIMAL",
    "GAMMA_ZERO",
    "SYMMETRIC_ODD_ZERO",
    "AXIS_CENTRAL_ALL_ODD_ZERO",
    "DET_N_FAMILY",
)


@dataclass(frozen=True)
class ClosedDetResult:
    """Outcome of the closed-form lookup.

    value is None when no case applies.  signed is False when the matched
    formula only determines the absolute value of the determinant.
    """

    value: int | None
    case: str
    relabeling: tuple[int, int, int]
    signed: bool = True

    @property
    def matched(self) -> bool:
        return self.case != "NONE"


def _gamma_zero_abs(q: AciParams) -> int:
    # semistability gives beta >= A and alpha >= B here
    _, A, B, C, M = hex_stats(q)
    hr = HyperRatio()
    _mac_into(hr, q.beta - A, A, M)
    _mac_into(hr, q.alpha - B, B, M)
    hr.mul(A + M).mul(B + M).mul(C + M).mul(A + B + C + M)
    hr.div(q.a).div(q.b).div(q.c).div(M)
    return hr.value()


def _closed_det_one(q: AciParams) -> ClosedDetResult | None:
    """Try every case, in the fixed priority order, on q as labeled."""
    ident = PAIR_PERMUTATIONS[0]
    s2, A, B, C, M = hex_stats(q)
    if M == 0:
        return ClosedDetResult(mac(A, B, C), "M_ZERO", ident)
    if C == 0:
        return ClosedDetResult(mac(M, A - q.beta, B - q.alpha), "C_ZERO", ident)
    if C == q.alpha + q.beta:
        # the surviving path family is the k = beta one, sign (-1)^(M*(C-beta))
        sign = -1 if (M * q.alpha) % 2 else 1
        return ClosedDetResult(sign * mac(A, B, C + M), "C_MAXIMAL", ident)
    if q.gamma == 0:
        return ClosedDetResult(_gamma_zero_abs(q), "GAMMA_ZERO", ident, signed=False)
    if q.a == q.b and q.alpha == q.beta and q.c % 2 and q.gamma % 2:
        return ClosedDetResult(0, "SYMMETRIC_ODD_ZERO", ident)
    if min(q.mixed()) > 0:
        info = classify_puncture(q)
        if (
            info.axis_central
            and M % 2 == 1
            and q.a % 2 == q.b % 2 == q.c % 2
            and s2 % 2 != q.a % 2
        ):
            return ClosedDetResult(0, "AXIS_CENTRAL_ALL_ODD_ZERO", ident)
    if (
        q.gamma >= 1
        and q.beta == q.b - 2
        and q.c == q.a + q.beta + 1
        and q.alpha == q.a - q.gamma
    ):
        # kept for completeness; members of this family always have C == 0,
        # so the C_ZERO branch fires first and agrees
        return ClosedDetResult(q.gamma, "DET_N_FAMILY", ident)
    return None


def closed_det(p: AciParams) -> ClosedDetResult:
    """Closed form for the determinant of the degree step matrix, if one of
    the known product cases matches p up to relabeling of the variable pairs.

    Relabelings are tried in PAIR_PERMUTATIONS order and, within each, the
    cases in CLOSED_DET_CASES order; the first hit wins.

    The signed value refers to the relabeled instance
    p.relabel(result.relabeling); relabeling preserves |det| but can flip
    its sign.
    """
    hex_stats(p)  # rejects non-hexagonal input
    for perm in PAIR_PERMUTATIONS:
        q = p.relabel(perm)
        hit = _closed_det_one(q)
        if hit is not None:
            return ClosedDetResult(hit.value, hit.case, perm, hit.signed)
    return ClosedDetResult(None, "NONE", PAIR_PERMUTATIONS[0])


# ---------------------------------------------------------------------------
# the symmetric family conjecture


def symmetry_conjecture(p: AciParams) -> int:
    """Conjectural signed determinant for the symmetric family a = b,
    alpha = beta, with c and gamma not both odd.

    This is an experimental formula, not a theorem; the test suite compares
    it against exact determinants and reports disagreements as findings.
    """
    s2, A, B, C, M = hex_stats(p)
    if p.a != p.b or p.alpha != p.beta:
        raise ParameterError("symmetric form needs a == b and alpha == beta")
    if p.c % 2 and p.gamma % 2:
        raise ParameterError(
            "not defined when c and gamma are both odd (determinant is 0)"
        )
    g = p.gamma
    if (C - g) % 2 or A != B:
        raise InternalCheckError("parity drift in symmetric parameters")
    half_sum = (C + g) // 2
    half_diff = (C - g) // 2  # alpha - A

    hr = HyperRatio()
    hr.mul(M + C).mul(M + g)
    hr.mul(M + A + C // 2).mul(M + A + (C + 1) // 2)
    hr.mul(M + 2 * A + C)
    hr.div(M + 2 * A).div(M + A + C, 2).div(M + half_sum, 2)

    for half in (M // 2, (M + 1) // 2):
        hr.mul(half).mul(half + A).mul(half + half_sum).mul(half + A + half_diff)
    hr.div((M + C) // 2).div((M + C + 1) // 2)
    hr.div((M + g) // 2).div((M + g + 1) // 2)
    hr.div((M + C) // 2 + A).div((M + C + 1) // 2 + A)
    hr.div((M - g) // 2 + A).div((M - g + 1) // 2 + A)

    hr.mul(A - g // 2).mul(C // 2).mul(g // 2)
    hr.mul(A - (g + 1) // 2).mul((C + 1) // 2).mul((g + 1) // 2)
    hr.div(g).div(A + half_diff, 2)

    sign = -1 if (M * ((C + 1) // 2)) % 2 else 1
    return sign * hr.value()


# ---------------------------------------------------------------------------
# exact polynomials and interpolation along one-parameter families


@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial with exact rational coefficients,
    stored low degree first with no trailing zeros."""

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def of(*coeffs) -> "Polynomial":
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return Polynomial(tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x) -> Fraction:
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        cs = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            cs[i] += c
        for i, c in enumerate(other.coeffs):
            cs[i] += c
        return Polynomial.of(*cs)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + other.scale(-1)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if not self.coeffs or not other.coeffs:
            return Polynomial.of()
        cs = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                cs[i + j] += a * b
        return Polynomial.of(*cs)

    def scale(self, k) -> "Polynomial":
        k = Fraction(k)
        return Polynomial.of(*(c * k for c in self.coeffs))

    def shift_argument(self, delta) -> "Polynomial":
        """The polynomial x -> self(x + delta)."""
        out = Polynomial.of()
        base = Polynomial.of(Fraction(delta), 1)
        for c in reversed(self.coeffs):
            out = out * base + Polynomial.of(c)
        return out

    def divide_by(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Long division; returns (quotient, remainder)."""
        if not other.coeffs:
            raise ParameterError("division by the zero polynomial")
        rem = list(self.coeffs)
        od = other.degree
        lead = other.coeffs[-1]
        q = [Fraction(0)] * max(len(rem) - od, 0)
        for d in range(len(rem) - 1, od - 1, -1):
            factor = rem[d] / lead
            if factor:
                q[d - od] = factor
                for i, c in enumerate(other.coeffs):
                    rem[d - od + i] -= factor * c
        return Polynomial.of(*q), Polynomial.of(*rem)

    def format(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                term = str(mag)
            else:
                head = "" if mag == 1 else "%s*" % mag
                term = head + (var if d == 1 else "%s^%d" % (var, d))
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)


def lagrange_interpolate(points) -> Polynomial:
    """Unique polynomial of degree < len(points) through the given points."""
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ParameterError("interpolation nodes must be distinct")
    total = Polynomial.of()
    for i, (xi, yi) in enumerate(pts):
        basis = Polynomial.of(1)
        denom = Fraction(1)
        for j, (xj, _) in enumerate(pts):
            if j != i:
                basis = basis * Polynomial.of(-xj, 1)
                denom *= xi - xj
        total = total + basis.scale(yi / denom)
    return total


def det_poly_interpolate(
    A: int,
    B: int,
    C: int,
    alpha: int,
    beta: int,
    parity: int,
    degree_bound: int,
    extra: int = 2,
) -> Polynomial:
    """Interpolate the determinant along the family with fixed side lengths
    A, B, C and puncture column (alpha, beta), as a polynomial in M running
    over one parity class (parity 0 for even M, 1 for odd).

    The first degree_bound + 1 valid members are interpolated and the next
    `extra` members double as a consistency check on the degree bound.
    """
    if parity not in (0, 1):
        raise ParameterError("parity must be 0 or 1")
    if degree_bound < 0:
        raise ParameterError("degree_bound must be >= 0")
    if extra < 1:
        raise ParameterError("need at least one checking sample")
    need = degree_bound + 1 + extra
    samples: list[tuple[int, int]] = []
    M = parity
    limit = 2 * need + 200
    while len(samples) < need:
        if M > limit:
            raise ParameterError("could not find enough valid members of the family")
        try:
            q = hexagon_to_params(A, B, C, M, alpha, beta)
        except ParameterError:
            M += 2
            continue
        samples.append((M, det_exact(build_N(q))))
        M += 2
    poly = lagrange_interpolate(samples[: degree_bound + 1])
    for x, y in samples[degree_bound + 1 :]:
        if poly(x) != y:
            raise ParameterError(
                "degree bound %d is too small for this family" % degree_bound
            )
    return poly


def integer_linear_factors(
    poly: Polynomial, bound: int = 256
) -> tuple[tuple[tuple[int, int], ...], Polynomial]:
    """Split off the linear factors of poly with integer roots.

    Returns (roots, remainder) where roots is a tuple of (root, multiplicity)
    sorted by root, |root| <= bound, and
    poly == prod (x - root)^multiplicity * remainder exactly.
    """
    if poly.degree < 0:
        raise ParameterError("the zero polynomial has no factor structure")
    rest = poly
    roots: list[tuple[int, int]] = []
    for r in range(-bound, bound + 1):
        mult = 0
        while rest.degree >= 1 and rest(r) == 0:
            quot, rem = rest.divide_by(Polynomial.of(-r, 1))
            if rem.coeffs:
                raise InternalCheckError("exact linear division left a remainder")
            rest = quot
            mult += 1
        if mult:
            roots.append((r, mult))
    return tuple(roots), rest
