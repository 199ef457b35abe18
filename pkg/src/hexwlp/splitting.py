"""Generic splitting types of the syzygy bundle, and the equivalence report.

The four generators x^a, y^b, z^c, x^alpha y^beta z^gamma present a rank-3
syzygy module; restricted to the general line x+y+z = 0 it splits as a sum
of three line bundle twists O(-p) + O(-q) + O(-r).  This module computes the
triple (p, q, r) case by case (non-semistable shapes, semistable with sum
not divisible by 3, hexagonal), the splitting on the two special lines z = 0
and y+z = 0, and a consolidated report tying the Lefschetz verdict to the
determinant, the regularity and the splitting type.

Restricting to x+y+z = 0 identifies the quotient with S/J where S = K[x,y]
and J = (x^a, y^b, (x+y)^c, x^alpha y^beta (x+y)^gamma).  A rank oracle for
reg J over the rationals or a prime field lives here too; it exists for
tests, not for the fast path.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import InternalCheckError, ParameterError
from .linalg import det_exact, is_certified_prime, matrix_rank_exact, matrix_rank_mod
from .matrices import build_N
from .params import AciParams, PAIR_PERMUTATIONS, derive_stats, hex_stats


@dataclass(frozen=True)
class SplittingType:
    """Sorted splitting degrees (p, q, r) of the syzygy bundle on a line.

    conditional marks values that rest on the balanced/ladder dichotomy in
    positive characteristic, where the determinant decides the Lefschetz
    property but the splitting statement itself is proved over char 0.
    """

    p: int
    q: int
    r: int
    conditional: bool = False

    def __post_init__(self):
        if not (0 < self.p <= self.q <= self.r):
            raise ParameterError(
                f"splitting degrees must be positive and ascending, got "
                f"({self.p}, {self.q}, {self.r})"
            )

    @staticmethod
    def of(values, conditional: bool = False) -> "SplittingType":
        p, q, r = sorted(values)
        return SplittingType(p, q, r, conditional)

    def as_tuple(self):
        return (self.p, self.q, self.r)

    @property
    def total(self) -> int:
        return self.p + self.q + self.r

    @property
    def balanced(self) -> bool:
        return self.p == self.r


def _check_characteristic(characteristic: int) -> None:
    if characteristic == 0:
        return
    if characteristic < 2 or not is_certified_prime(characteristic):
        raise ParameterError(f"characteristic {characteristic} is not 0 or a prime")


def reg_two_var(a: int, b: int, alpha: int, beta: int, gamma: int) -> int:
    """Regularity of (x^a, y^b, x^alpha y^beta (x+y)^gamma) in K[x,y], char 0.

    Requires alpha+beta+gamma < a+b.  The two pairs are swapped internally so
    that 0 < a-alpha <= b-beta; inputs admitting no such labeling, or falling
    outside the three case shapes, are rejected.
    """
    vals = (a, b, alpha, beta, gamma)
    if any(not isinstance(v, int) or v < 0 for v in vals):
        raise ParameterError(f"exponents must be non-negative integers, got {vals}")
    if alpha + beta + gamma >= a + b:
        raise ParameterError(
            f"mixed degree {alpha + beta + gamma} must be < a+b = {a + b}"
        )
    if not 0 < a - alpha <= b - beta:
        a, b, alpha, beta = b, a, beta, alpha
    if not 0 < a - alpha <= b - beta:
        raise ParameterError(
            "no labeling with 0 < a-alpha <= b-beta; the pure powers must "
            "properly dominate the mixed exponents"
        )
    if gamma > b - beta + alpha - a:
        return -(-(a + b + alpha + beta + gamma) // 2) - 1
    if alpha == 0:
        if gamma == 0:
            raise ParameterError("alpha = gamma = 0 is not covered")
        return a + beta + gamma - 1
    if beta == 0 and gamma == 0:
        raise ParameterError("beta = gamma = 0 with alpha > 0 is not covered")
    return alpha + b - 1


def _sorted_perm(p: AciParams):
    pures = p.pure()
    return tuple(sorted(range(3), key=lambda i: pures[i]))


def _non_semistable_type(p: AciParams) -> SplittingType:
    st = derive_stats(p)
    q = p.relabel(_sorted_perm(p))
    mix = q.alpha + q.beta + q.gamma
    if st.M < 0:
        # Mixed generator extraneous on the line.  With a <= b <= c the
        # remaining pair splits evenly unless (x+y)^c is itself extraneous.
        if q.c >= q.a + q.b:
            return SplittingType.of((q.a + q.b, q.c, mix))
        tot = q.a + q.b + q.c
        return SplittingType.of((tot // 2, -(-tot // 2), mix))
    if min(st.A, st.B, st.C) < 0:
        # (x+y)^c extraneous; the other three generators decide the rest.
        if mix >= q.a + q.b:
            r = q.a + q.b - 1
        else:
            r = reg_two_var(q.a, q.b, q.alpha, q.beta, q.gamma)
        return SplittingType.of((q.a + q.b + mix - r - 1, r + 1, q.c))
    # One pair bound fails: relabel it to the front.  At most one bound can
    # fail, and the formula is symmetric in the other two pairs.
    s2 = st.s_plus_2
    for perm in PAIR_PERMUTATIONS:
        w = p.relabel(perm)
        if s2 - w.a > w.beta + w.gamma:
            half = w.alpha + w.b + w.c
            return SplittingType.of(
                (half // 2, -(-half // 2), w.a + w.beta + w.gamma)
            )
    raise InternalCheckError(f"no destabilizing pair found for {p}")


def wlp_holds(p: AciParams, characteristic: int = 0) -> bool:
    """Lefschetz verdict for hexagonal parameters via det N mod char."""
    _check_characteristic(characteristic)
    hex_stats(p)
    dn = det_exact(build_N(p))
    if characteristic:
        return dn % characteristic != 0
    return dn != 0


def generic_splitting_type(p: AciParams, characteristic: int = 0) -> SplittingType:
    """Splitting degrees of the syzygy bundle on a general line.

    Positive characteristic is supported only for hexagonal parameters,
    where the determinant criterion decides the balanced/ladder dichotomy;
    the other case formulas are characteristic-zero statements.
    """
    _check_characteristic(characteristic)
    st = derive_stats(p)
    if characteristic and not st.hexagonal:
        raise ParameterError(
            "positive characteristic is supported only for hexagonal parameters"
        )
    if not st.semistable:
        got = _non_semistable_type(p)
    elif st.triple_sum % 3 == 1:
        k = st.triple_sum // 3
        got = SplittingType.of((k, k, k + 1))
    elif st.triple_sum % 3 == 2:
        k = st.triple_sum // 3
        got = SplittingType.of((k, k + 1, k + 1))
    else:
        s2 = st.triple_sum // 3
        conditional = characteristic != 0
        if wlp_holds(p, characteristic):
            got = SplittingType.of((s2, s2, s2), conditional)
        else:
            got = SplittingType.of((s2 - 1, s2, s2 + 1), conditional)
    if got.total != p.triple_sum:
        raise InternalCheckError(
            f"splitting degrees {got.as_tuple()} do not sum to {p.triple_sum}"
        )
    return got


@dataclass(frozen=True)
class JumpingLines:
    """Splitting on the special lines z = 0 and y+z = 0.

    yz_line is None when the parameters fall outside the two covered shapes;
    no value is extrapolated there.
    """

    z_line: SplittingType
    yz_line: SplittingType | None


def jumping_lines(p: AciParams) -> JumpingLines:
    """Characteristic-zero splitting types on the lines z = 0 and y+z = 0."""
    mix = p.alpha + p.beta + p.gamma
    if p.gamma == 0:
        z_line = SplittingType.of((p.c, p.alpha + p.b, p.a + p.beta))
    else:
        z_line = SplittingType.of((p.c, mix, p.a + p.b))
    if z_line.total != p.triple_sum:
        raise InternalCheckError("z-line degrees do not sum to the exponent total")
    yz_line = None
    if p.beta + p.gamma < p.b <= p.c:
        yz_line = SplittingType.of((p.c, p.a + p.beta + p.gamma, p.alpha + p.b))
    elif p.b <= min(p.c, p.beta + p.gamma):
        yz_line = SplittingType.of((p.c, mix, p.a + p.b))
    if yz_line is not None and yz_line.total != p.triple_sum:
        raise InternalCheckError("yz-line degrees do not sum to the exponent total")
    return JumpingLines(z_line, yz_line)


@dataclass(frozen=True)
class EquivalenceReport:
    """Joint verdict: WLP, determinant, regularity and splitting agree."""

    wlp: bool
    reg_J: int
    det_nonzero_mod_char: bool
    splitting: SplittingType
    characteristic: int


def equivalence_report(p: AciParams, characteristic: int = 0) -> EquivalenceReport:
    """Assemble the hexagonal-case equivalences and assert their consistency."""
    _check_characteristic(characteristic)
    s2, *_ = hex_stats(p)
    dn = det_exact(build_N(p))
    if characteristic:
        nonzero = dn % characteristic != 0
    else:
        nonzero = dn != 0
    wlp = wlp_holds(p, characteristic)
    reg_j = s2 - 1 if wlp else s2
    splitting = generic_splitting_type(p, characteristic)
    if wlp != nonzero:
        raise InternalCheckError("Lefschetz verdict disagrees with the determinant")
    if splitting.balanced != wlp:
        raise InternalCheckError("splitting type disagrees with the Lefschetz verdict")
    if max(splitting.as_tuple()) - 1 != reg_j:
        raise InternalCheckError("splitting type disagrees with the regularity")
    return EquivalenceReport(wlp, reg_j, nonzero, splitting, characteristic)


def _degree_rows(gens, d: int):
    # Span of the degree-d piece of the ideal generated by x^A y^B (x+y)^G
    # monomial shapes, on the basis x^d, x^(d-1)y, ..., y^d.
    rows = []
    for A, B, G in gens:
        e = A + B + G
        if e > d:
            continue
        for u in range(d - e + 1):
            row = [0] * (d + 1)
            for k in range(G + 1):
                row[A + u + k] = comb(G, k)
            rows.append(row)
    return rows


def _line_ideal_reg(gens, characteristic: int) -> int:
    _check_characteristic(characteristic)
    for A, B, G in gens:
        if A + B + G == 0:
            raise ParameterError("a degree-zero generator makes the ideal trivial")
    ax = min((A for A, B, G in gens if B == 0 and G == 0), default=None)
    by = min((B for A, B, G in gens if A == 0 and G == 0), default=None)
    if ax is None or by is None:
        raise ParameterError("regularity oracle needs pure powers of both variables")
    last = 0
    for d in range(1, ax + by):
        rows = _degree_rows(gens, d)
        if characteristic:
            rank = matrix_rank_mod(rows, characteristic)
        else:
            rank = matrix_rank_exact(rows)
        if rank == d + 1:
            break
        last = d
    else:
        raise InternalCheckError("quotient failed to vanish by degree ax+by-1")
    return last + 1


def restricted_ideal_regularity(p: AciParams, characteristic: int = 0) -> int:
    """reg J for J = (x^a, y^b, (x+y)^c, x^alpha y^beta (x+y)^gamma).

    Exact rank computation degree by degree, over the rationals or a prime
    field.  Test oracle only: max splitting degree equals reg J + 1 whenever
    the four generators present the ideal minimally.
    """
    gens = [
        (p.a, 0, 0),
        (0, p.b, 0),
        (0, 0, p.c),
        (p.alpha, p.beta, p.gamma),
    ]
    return _line_ideal_reg(gens, characteristic)


def two_variable_regularity(
    a: int, b: int, alpha: int, beta: int, gamma: int, characteristic: int = 0
) -> int:
    """Rank oracle twin of reg_two_var, for (x^a, y^b, x^alpha y^beta (x+y)^gamma)."""
    vals = (a, b, alpha, beta, gamma)
    if any(not isinstance(v, int) or v < 0 for v in vals):
        raise ParameterError(f"exponents must be non-negative integers, got {vals}")
    gens = [(a, 0, 0), (0, b, 0), (alpha, beta, gamma)]
    return _line_ideal_reg(gens, characteristic)
