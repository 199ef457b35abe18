"""Parameter sextuples and their derived invariants.

A monomial almost complete intersection in three variables is cut out by
three pure powers x^a, y^b, z^c together with one mixed monomial
x^alpha y^beta z^gamma.  Everything downstream (Hilbert functions, the two
determinant matrices, tilings, closed formulas) is driven by six derived
integers: the peak position s+2 and the hexagon data A, B, C, M.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalCheckError, ParameterError

# Pair permutations in dispatch order: identity, transpositions, 3-cycles.
PAIR_PERMUTATIONS = (
    (0, 1, 2),
    (1, 0, 2),
    (0, 2, 1),
    (2, 1, 0),
    (1, 2, 0),
    (2, 0, 1),
)


@dataclass(frozen=True)
class AciParams:
    """Validated exponent sextuple (a, b, c, alpha, beta, gamma)."""

    a: int
    b: int
    c: int
    alpha: int
    beta: int
    gamma: int

    def __post_init__(self):
        vals = (self.a, self.b, self.c, self.alpha, self.beta, self.gamma)
        if not all(isinstance(v, int) for v in vals):
            raise ParameterError(f"exponents must be integers, got {vals}")
        for pure, mixed, name in self.pairs():
            if pure < 1:
                raise ParameterError(f"{name}: pure power {pure} must be >= 1")
            if not 0 <= mixed < pure:
                raise ParameterError(
                    f"{name}: mixed exponent {mixed} must satisfy 0 <= e < {pure}"
                )
        # Two or three vanishing mixed exponents would make the fourth
        # generator divide a pure power (or be a unit): not an ACI.
        if sum(1 for m in self.mixed() if m == 0) > 1:
            raise ParameterError(
                f"at most one of alpha, beta, gamma may be zero, got {self.mixed()}"
            )

    def pure(self):
        return (self.a, self.b, self.c)

    def mixed(self):
        return (self.alpha, self.beta, self.gamma)

    def pairs(self):
        return (
            (self.a, self.alpha, "x"),
            (self.b, self.beta, "y"),
            (self.c, self.gamma, "z"),
        )

    def as_tuple(self):
        return (self.a, self.b, self.c, self.alpha, self.beta, self.gamma)

    @property
    def triple_sum(self):
        return self.a + self.b + self.c + self.alpha + self.beta + self.gamma

    def relabel(self, perm) -> "AciParams":
        """Permute the variable roles: new pair i is old pair perm[i]."""
        pures = self.pure()
        mixeds = self.mixed()
        return AciParams(
            pures[perm[0]], pures[perm[1]], pures[perm[2]],
            mixeds[perm[0]], mixeds[perm[1]], mixeds[perm[2]],
        )


@dataclass(frozen=True)
class DerivedStats:
    """Invariants controlling semistability and the hexagon geometry.

    s_plus_2, A, B, C, M are exact rationals; they are integers exactly when
    the triple sum is divisible by 3.
    """

    triple_sum: int
    s_plus_2: Fraction
    A: Fraction
    B: Fraction
    C: Fraction
    M: Fraction
    semistable: bool
    hexagonal: bool

    def as_ints(self):
        """(s+2, A, B, C, M) as plain ints; requires hexagonal."""
        if not self.hexagonal:
            raise ParameterError("stats are integral only for hexagonal parameters")
        return (int(self.s_plus_2), int(self.A), int(self.B), int(self.C), int(self.M))


def derive_stats(p: AciParams) -> DerivedStats:
    """Compute s+2 = triple_sum/3 and the side data A, B, C, M."""
    total = p.triple_sum
    s2 = Fraction(total, 3)
    A = s2 - p.a
    B = s2 - p.b
    C = s2 - p.c
    M = s2 - (p.alpha + p.beta + p.gamma)
    semistable = (
        0 <= M
        and 0 <= A <= p.beta + p.gamma
        and 0 <= B <= p.alpha + p.gamma
        and 0 <= C <= p.alpha + p.beta
    )
    hexagonal = semistable and total % 3 == 0
    return DerivedStats(total, s2, A, B, C, M, semistable, hexagonal)


def hex_stats(p: AciParams):
    """(s+2, A, B, C, M) as ints, or ParameterError when not hexagonal."""
    st = derive_stats(p)
    if not st.hexagonal:
        raise ParameterError(
            f"parameters {p.as_tuple()} are not hexagonal "
            f"(semistable={st.semistable}, triple_sum={st.triple_sum})"
        )
    return st.as_ints()


@dataclass(frozen=True)
class SocleInfo:
    cm_type: int
    socle_degrees: tuple
    level: bool
    resolution_n: int


def socle_info(p: AciParams) -> SocleInfo:
    """Cohen-Macaulay type, socle degrees and the resolution multiplicity n.

    Each socle degree pairs one mixed exponent with the two complementary
    pure powers; the degree with a vanishing mixed exponent drops out and the
    type falls to 2.  The quotient is level iff all surviving degrees agree.
    """
    total_pure = p.a + p.b + p.c
    degrees = []
    for pure, mixed, _ in p.pairs():
        if mixed == 0:
            continue
        degrees.append(mixed + (total_pure - pure) - 3)
    degrees.sort()
    n = 1 if all(m > 0 for m in p.mixed()) else 0
    return SocleInfo(
        cm_type=len(degrees),
        socle_degrees=tuple(degrees),
        level=len(set(degrees)) == 1,
        resolution_n=n,
    )


@dataclass(frozen=True)
class PunctureClass:
    axis_central: bool
    gravity_central: bool
    gravity_t: int | None


def classify_puncture(p: AciParams) -> PunctureClass:
    """Centrality of the puncture inside the hexagon (type 3 only).

    Gravity-central: the puncture sits at the hexagon's center of gravity,
    equivalently a-alpha = b-beta = c-gamma.  Axis-central: the puncture
    center lies on a symmetry axis of the triangular lattice; checked for
    all six role orderings since the mixed-parity form is not symmetric.
    """
    s2, A, B, C, M = hex_stats(p)
    if min(p.mixed()) == 0:
        raise ParameterError("puncture classification requires all mixed exponents positive")

    diffs = {pure - mixed for pure, mixed, _ in p.pairs()}
    gravity = len(diffs) == 1
    t = diffs.pop() if gravity else None

    axis = False
    for perm in PAIR_PERMUTATIONS:
        q = p.relabel(perm)
        if (q.a == 2 * q.alpha + M and q.b == 2 * q.beta + M
                and q.c == 2 * q.gamma + M):
            axis = True
            break
        if (q.a == 2 * q.alpha + M - 1 and q.b == 2 * q.beta + M + 1
                and q.c == 2 * q.gamma + M):
            axis = True
            break
    return PunctureClass(axis_central=axis, gravity_central=gravity, gravity_t=t)


def hexagon_to_params(A: int, B: int, C: int, M: int, alpha: int, beta: int) -> AciParams:
    """Invert the hexagon data: (A,B,C,M,alpha,beta) -> exponent sextuple."""
    for name, v in (("A", A), ("B", B), ("C", C), ("M", M)):
        if v < 0:
            raise ParameterError(f"hexagon side {name} = {v} must be >= 0")
    gamma = A + B + C - alpha - beta
    if gamma < 0:
        raise ParameterError(f"alpha + beta = {alpha + beta} exceeds A+B+C = {A + B + C}")
    p = AciParams(B + C + M, A + C + M, A + B + M, alpha, beta, gamma)
    st = derive_stats(p)
    if not st.hexagonal:
        raise ParameterError(
            f"hexagon data (A={A}, B={B}, C={C}, M={M}, alpha={alpha}, beta={beta}) "
            f"violates semistability"
        )
    if st.as_ints() != (A + B + C + M, A, B, C, M):
        raise InternalCheckError("hexagon data failed to round-trip")  # pragma: no cover
    return p


def ci_embed(a: int, b: int, c: int) -> AciParams:
    """Embed the complete intersection (x^a, y^b, z^c) as an ACI with M = 0.

    The added generator has degree (a+b+c)/2, so the pure-power sum must be
    even; the resulting mixed exponents must also satisfy the usual bounds.
    """
    if min(a, b, c) < 1:
        raise ParameterError("pure powers must be >= 1")
    if (a + b + c) % 2 != 0:
        raise ParameterError(f"a+b+c = {a + b + c} must be even for the embedding")
    alpha = (-a + b + c) // 2
    beta = (a - b + c) // 2
    gamma = (a + b - c) // 2
    p = AciParams(a, b, c, alpha, beta, gamma)
    st = derive_stats(p)
    if not st.hexagonal or st.M != 0:
        raise InternalCheckError("ci_embed produced non-hexagonal data")  # pragma: no cover
    return p
