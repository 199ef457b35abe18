"""Exact integer linear algebra: determinants, permanents, factoring, ranks.

Everything here works over Python's arbitrary-precision integers; no
floating point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import InternalCheckError, ParameterError
from .matrices import IntMatrix, build_N, build_Z
from .params import AciParams, hex_stats

PERMANENT_CAP_DEFAULT = 28
TRIAL_DIVISION_BOUND = 10 ** 6
RHO_ROUND_BUDGET = 10 ** 6


def det_exact(m: IntMatrix) -> int:
    """Signed determinant via fraction-free (Bareiss) elimination.

    Row swaps flip the tracked sign; every division in the update is exact.
    The empty matrix has determinant 1.
    """
    if not m.is_square():
        raise ParameterError(f"determinant needs a square matrix, got {m.nrows}x{m.ncols}")
    n = m.nrows
    if n == 0:
        return 1
    a = [list(row) for row in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            rowi = a[i]
            rowk = a[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * pivot - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def permanent_exact(m: IntMatrix, size_cap: int = PERMANENT_CAP_DEFAULT):
    """Permanent by Ryser's formula with Gray-code updates.

    Cost is O(2^n * n); returns None above size_cap instead of hanging.
    """
    if not m.is_square():
        raise ParameterError(f"permanent needs a square matrix, got {m.nrows}x{m.ncols}")
    n = m.nrows
    if n == 0:
        return 1
    if n > size_cap:
        return None
    row_sums = [0] * n
    total = 0
    subset = 0
    for g in range(1, 1 << n):
        gray = g ^ (g >> 1)
        bit = gray ^ subset
        j = bit.bit_length() - 1
        if gray & bit:
            for i in range(n):
                row_sums[i] += m.entries[i][j]
        else:
            for i in range(n):
                row_sums[i] -= m.entries[i][j]
        subset = gray
        prod = 1
        for v in row_sums:
            prod *= v
            if prod == 0:
                break
        if bin(gray).count("1") % 2 == n % 2:
            total += prod
        else:
            total -= prod
    return total


# ---------------------------------------------------------------------------
# Integer factorization: trial division, then Brent's rho with fixed seeds.

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_certified_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; the fixed base set certifies n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int, rounds: int):
    """One nontrivial factor of odd composite n, or None if budget runs out."""
    if n % 2 == 0:
        return 2
    for c in (1, 3, 5, 7, 11):  # fixed increments keep runs reproducible
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        steps = 0
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                lim = min(128, r - k)
                for _ in range(lim):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += lim
            steps += r
            r *= 2
            if steps > rounds:
                return None
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    return None


@dataclass(frozen=True)
class FactoredInt:
    """sign * prod(p^e) * cofactor; cofactor is None when fully factored."""

    sign: int
    factors: tuple        # ((prime, exponent), ...) sorted by prime
    cofactor: int | None

    def value(self) -> int:
        v = self.sign
        for prime, e in self.factors:
            v *= prime ** e
        if self.cofactor is not None:
            v *= self.cofactor
        return v

    def primes(self):
        return tuple(prime for prime, _ in self.factors)


def factor_integer(v: int, trial_bound: int = TRIAL_DIVISION_BOUND,
                   rho_rounds: int = RHO_ROUND_BUDGET) -> FactoredInt:
    """Factor v deterministically; a leftover composite lands in cofactor."""
    if v == 0:
        return FactoredInt(0, (), None)
    sign = 1 if v > 0 else -1
    n = abs(v)
    found = {}

    def record(prime, e=1):
        found[prime] = found.get(prime, 0) + e

    for d in (2, 3, 5):
        while n % d == 0:
            record(d)
            n //= d
    d = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    w = 0
    while d * d <= n and d <= trial_bound:
        while n % d == 0:
            record(d)
            n //= d
        d += wheel[w]
        w = (w + 1) % 8
    cofactor = None
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_certified_prime(m):
            record(m)
            continue
        g = _brent_rho(m, rho_rounds)
        if g is None or g == m:
            cofactor = m if cofactor is None else cofactor * m
            continue
        stack.append(g)
        stack.append(m // g)
    return FactoredInt(sign, tuple(sorted(found.items())), cofactor)


# ---------------------------------------------------------------------------
# WLP verdicts.

def primes_up_to(n: int):
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i:: i] = bytearray(len(sieve[i * i:: i]))
    return [i for i in range(n + 1) if sieve[i]]


def forced_failure_primes(p: AciParams):
    """Primes p with max(a,b,c) <= p^m <= s+1 for some m; these divide both dets."""
    s2, *_ = hex_stats(p)
    top = s2 - 1
    lo = max(p.a, p.b, p.c)
    out = []
    for q in primes_up_to(top):
        power = q
        while power <= top:
            if power >= lo:
                out.append(q)
                break
            power *= q
    return tuple(out)


@dataclass(frozen=True)
class WlpReport:
    det_N: int
    det_Z: int
    wlp_char0: bool
    bad_primes: tuple
    forced_primes: tuple
    always_fails: bool
    factorization: FactoredInt


def wlp_report(p: AciParams) -> WlpReport:
    """Characteristic-by-characteristic WLP verdict for hexagonal parameters.

    WLP holds in characteristic q iff q does not divide det N; det 0 means
    failure in every characteristic.  |det N| = |det Z| is asserted, and so
    is divisibility by each forced prime.
    """
    dn = det_exact(build_N(p))
    dz = det_exact(build_Z(p))
    if abs(dn) != abs(dz):
        raise InternalCheckError(
            f"|det N| = {abs(dn)} but |det Z| = {abs(dz)} for {p.as_tuple()}"
        )
    forced = forced_failure_primes(p)
    if dn != 0:
        for q in forced:
            if dn % q != 0:
                raise InternalCheckError(
                    f"forced prime {q} does not divide det = {dn} for {p.as_tuple()}"
                )
    fac = factor_integer(dn)
    bad = fac.primes() if dn != 0 else ()
    return WlpReport(
        det_N=dn,
        det_Z=dz,
        wlp_char0=dn != 0,
        bad_primes=bad,
        forced_primes=forced,
        always_fails=dn == 0,
        factorization=fac,
    )


# ---------------------------------------------------------------------------
# Exact ranks, used by the splitting-type oracle.

def matrix_rank_exact(rows) -> int:
    """Rank over the rationals via fraction-free elimination."""
    a = [list(r) for r in rows]
    if not a:
        return 0
    ncols = len(a[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, len(a)):
            if a[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        pivot = a[row][col]
        for r in range(row + 1, len(a)):
            arc = a[r][col]
            for j in range(col + 1, ncols):
                a[r][j] = (a[r][j] * pivot - arc * a[row][j]) // prev
            a[r][col] = 0
        prev = pivot
        row += 1
        rank += 1
        if row == len(a):
            break
    return rank


def matrix_rank_mod(rows, q: int) -> int:
    """Rank over the prime field F_q."""
    if q < 2 or not is_certified_prime(q):
        raise ParameterError(f"characteristic {q} is not prime")
    a = [[v % q for v in r] for r in rows]
    if not a:
        return 0
    ncols = len(a[0])
    rank = 0
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, len(a)):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = pow(a[row][col], -1, q)
        a[row] = [(v * inv) % q for v in a[row]]
        for r in range(len(a)):
            if r != row and a[r][col]:
                f = a[r][col]
                a[r] = [(x - f * y) % q for x, y in zip(a[r], a[row])]
        row += 1
        rank += 1
        if row == len(a):
            break
    return rank
