"""The two determinantal matrices deciding the weak Lefschetz property.

Z is the zero-one multiplication matrix between the twin peak degrees of
R/I; N is the small binomial matrix of lattice-path counts between the
hexagon-side and puncture start points and the common end side.  Both
determinants agree up to sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import NamedTuple

from .errors import ParameterError
from .hilbert import monomial_basis
from .params import AciParams, hex_stats


@dataclass(frozen=True)
class IntMatrix:
    """Dense, immutable matrix of arbitrary-precision integers."""

    entries: tuple

    def __post_init__(self):
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise ParameterError("ragged rows in matrix")

    @classmethod
    def from_rows(cls, rows):
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @property
    def nrows(self):
        return len(self.entries)

    @property
    def ncols(self):
        return len(self.entries[0]) if self.entries else 0

    def row(self, i):
        return self.entries[i]

    def __getitem__(self, rc):
        return self.entries[rc[0]][rc[1]]

    def is_square(self):
        return self.nrows == self.ncols

    def to_decimal_rows(self):
        """JSON-friendly form: decimal strings, no precision loss."""
        return [[str(v) for v in row] for row in self.entries]


class LatticePoint(NamedTuple):
    x: int
    y: int


def build_Z(p: AciParams) -> IntMatrix:
    """Zero-one matrix of multiplication by x+y+z from degree s to s+1.

    Rows are the lex-ordered degree-s monomials, columns the degree-(s+1)
    ones; an entry is 1 iff the column monomial is divisible by the row
    monomial.  Square of size h_s by twin peaks.
    """
    s2, *_ = hex_stats(p)
    s = s2 - 2
    rows = monomial_basis(p, s)
    cols = monomial_basis(p, s + 1)
    if len(rows) != len(cols):
        raise ParameterError(f"peak sizes differ for {p.as_tuple()}")  # pragma: no cover
    return IntMatrix.from_rows(
        [[1 if r.divides(c) else 0 for c in cols] for r in rows]
    )


def build_N(p: AciParams) -> IntMatrix:
    """(C+M) x (C+M) binomial matrix; row blocks for hexagon side and puncture.

    Entry conventions follow the lattice-path model: out-of-range binomials
    are zero.  The row order fixes the sign of the determinant.
    """
    s2, A, B, C, M = hex_stats(p)
    n = C + M
    rows = []
    for i in range(1, C + 1):
        rows.append([comb(p.c, A + j - i) if 0 <= A + j - i <= p.c else 0
                     for j in range(1, n + 1)])
    shift = A + C - p.beta
    for i in range(C + 1, n + 1):
        rows.append([comb(p.gamma, shift + j - i) if 0 <= shift + j - i <= p.gamma else 0
                     for j in range(1, n + 1)])
    return IntMatrix.from_rows(rows)


def nilp_endpoints(p: AciParams):
    """Start and end points of the C+M lattice paths, orthogonal coordinates.

    Starts 1..C sit on the hexagon side of length C, starts C+1..C+M on the
    puncture side; all C+M ends lie on the side of length C+M.  Paths move
    right/down.
    """
    s2, A, B, C, M = hex_stats(p)
    starts = [LatticePoint(i - 1, B + M + i - 1) for i in range(1, C + 1)]
    starts += [LatticePoint(p.beta + i - C - 1, B - p.alpha + i - 1)
               for i in range(C + 1, C + M + 1)]
    ends = [LatticePoint(A + j - 1, j - 1) for j in range(1, C + M + 1)]
    return starts, ends


def lattice_path_count(a: LatticePoint, e: LatticePoint) -> int:
    """Number of right/down paths from a to e; zero when unreachable."""
    dx = e.x - a.x
    dy = a.y - e.y
    if dx < 0 or dy < 0:
        return 0
    return comb(dx + dy, dx)


def path_count_matrix(p: AciParams) -> IntMatrix:
    """Matrix of path counts start_i -> end_j; equals build_N entrywise."""
    starts, ends = nilp_endpoints(p)
    return IntMatrix.from_rows(
        [[lattice_path_count(a, e) for e in ends] for a in starts]
    )
