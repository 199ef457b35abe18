"""Punctured hexagon regions, lozenge tilings, and their two encodings.

A hexagonal parameter set carves a punctured hexagon out of the triangular
grid of side s+2.  One triangle orientation carries the degree-s basis
monomials, the other the degree-(s+1) ones, and lozenges pair adjacent
cells exactly as divisibility pairs basis monomials.  Tilings convert
losslessly to families of non-intersecting lattice paths and to perfect
matchings, which carry the two signs behind the determinant formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceededError, InternalCheckError, ParameterError
from .hilbert import Monomial, monomial_basis, twin_peaks
from .matrices import LatticePoint, build_Z, nilp_endpoints
from .params import AciParams, hex_stats

NODE_BUDGET_DEFAULT = 10_000_000

_STEPS = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def down_cell_corners(m) -> tuple[tuple[int, int, int], ...]:
    """Grid corners of the cell of a degree-s monomial."""
    i, j, k = m
    return ((i + 1, j + 1, k), (i + 1, j, k + 1), (i, j + 1, k + 1))


def up_cell_corners(n) -> tuple[tuple[int, int, int], ...]:
    """Grid corners of the cell of a degree-(s+1) monomial."""
    i, j, k = n
    return ((i + 1, j, k), (i, j + 1, k), (i, j, k + 1))


def vertex_position(v) -> tuple[Fraction, int]:
    """Planar placement of a grid vertex as (horizontal, vertical units).

    One vertical unit is sqrt(3)/2 in euclidean terms; keeping it symbolic
    makes the coordinates exact.  The x corner of the grid sits at the
    bottom, the y corner upper right, the z corner upper left.
    """
    _, v2, w = v
    return (Fraction(v2 - w, 2), v2 + w)


class Region:
    """The punctured hexagon of a hexagonal parameter set.

    down_cells hold the degree-s basis monomials and up_cells the
    degree-(s+1) ones, both in the lexicographic order of the divisibility
    matrix, so the adjacency structure reproduces build_Z exactly (checked
    at construction).  Side lengths run clockwise from the bottom edge:
    (A, B+M, C, A+M, B, C+M), with the puncture of side M placed alpha,
    beta, gamma units from the respective sides.
    """

    def __init__(self, params: AciParams):
        s2, A, B, C, M = hex_stats(params)
        self.params = params
        self.s = s2 - 2
        self.A, self.B, self.C, self.M = A, B, C, M
        self.side_lengths = (A, B + M, C, A + M, B, C + M)
        self.puncture_offsets = params.mixed()
        self.down_cells = monomial_basis(params, self.s)
        self.up_cells = monomial_basis(params, self.s + 1)
        h, equal = twin_peaks(params)
        if not equal or len(self.down_cells) != h or len(self.up_cells) != h:
            raise InternalCheckError("cell counts disagree with the h-vector peak")
        self._down_index = {m: i for i, m in enumerate(self.down_cells)}
        self._up_index = {n: j for j, n in enumerate(self.up_cells)}

        ups = []
        for m in self.down_cells:
            row = []
            for dx, dy, dz in _STEPS:
                j = self._up_index.get(Monomial(m.i + dx, m.j + dy, m.k + dz))
                if j is not None:
                    row.append(j)
            ups.append(tuple(sorted(row)))
        self.ups_of_down = tuple(ups)
        downs: list[list[int]] = [[] for _ in self.up_cells]
        for i, row in enumerate(self.ups_of_down):
            for j in row:
                downs[j].append(i)
        self.downs_of_up = tuple(tuple(x) for x in downs)

        Z = build_Z(params)
        for i in range(h):
            neighbors = set(self.ups_of_down[i])
            for j in range(h):
                if (1 if j in neighbors else 0) != Z[i, j]:
                    raise InternalCheckError("adjacency disagrees with divisibility")

        self.starts, self.ends = nilp_endpoints(params)

    @property
    def h(self) -> int:
        return len(self.down_cells)

    def down_index(self, m) -> int:
        try:
            return self._down_index[tuple(m)]
        except KeyError:
            raise ParameterError(
                "%r is not a degree-%d cell of the region" % (tuple(m), self.s)
            ) from None

    def up_index(self, n) -> int:
        try:
            return self._up_index[tuple(n)]
        except KeyError:
            raise ParameterError(
                "%r is not a degree-%d cell of the region" % (tuple(n), self.s + 1)
            ) from None

    def __repr__(self):
        return "Region(%r)" % (self.params,)


def build_region(p: AciParams) -> Region:
    """Region of the punctured hexagon attached to hexagonal parameters."""
    return Region(p)


class Tiling:
    """A lozenge tiling, stored as the pairing down cell -> up cell."""

    def __init__(self, region: Region, up_of):
        self.region = region
        self.up_of = tuple(up_of)
        if sorted(self.up_of) != list(range(region.h)):
            raise ParameterError("pairing is not a bijection between the cell sets")
        for i, j in enumerate(self.up_of):
            if j not in region.ups_of_down[i]:
                raise ParameterError("pairing joins non-adjacent cells")

    @property
    def lozenges(self) -> tuple[tuple[int, int], ...]:
        """Ordered (down index, up index) pairs."""
        return tuple(enumerate(self.up_of))

    def lozenge_axis(self, i: int) -> str:
        """Which variable's exponent grows across lozenge i: 'x', 'y' or 'z'."""
        m = self.region.down_cells[i]
        n = self.region.up_cells[self.up_of[i]]
        if n.i == m.i + 1:
            return "x"
        if n.j == m.j + 1:
            return "y"
        return "z"

    def __eq__(self, other):
        return (
            isinstance(other, Tiling)
            and self.region is other.region
            and self.up_of == other.up_of
        )

    def __hash__(self):
        return hash(self.up_of)

    def __repr__(self):
        return "Tiling(h=%d, up_of=%r)" % (self.region.h, self.up_of)


def perm_sign(pi) -> int:
    """Sign of a permutation given as a 0-based image tuple."""
    seen = [False] * len(pi)
    sgn = 1
    for start in range(len(pi)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = pi[i]
            length += 1
        if length % 2 == 0:
            sgn = -sgn
    return sgn


@dataclass(frozen=True)
class Matching:
    """Permutation view of a tiling: row monomial i pairs with column pi[i]."""

    pi: tuple[int, ...]
    sign: int


def tiling_to_matching(t: Tiling) -> Matching:
    return Matching(t.up_of, perm_sign(t.up_of))


def matching_to_tiling(region: Region, m: Matching) -> Tiling:
    return Tiling(region, m.pi)


@dataclass(frozen=True)
class PathFamily:
    """Non-intersecting monotone lattice paths encoding a tiling.

    paths[i] lists the lattice points walked from start i (right or down
    steps only; a single point means the start coincides with an end).
    lam[i] is the index of the end reached, and k counts the side starts
    that lam keeps in place (k = C when there is no puncture).
    """

    paths: tuple[tuple[LatticePoint, ...], ...]
    lam: tuple[int, ...]
    k: int

    @property
    def sign(self) -> int:
        return perm_sign(self.lam)


def _edge_point(region: Region, tri) -> LatticePoint:
    # path vertex at the constant-z-coordinate edge of the degree-(s+1)
    # grid triangle tri (which itself may lie outside the region)
    return LatticePoint(tri[1], region.B + region.M + region.C - 1 - tri[0])


def _edge_triangle(region: Region, pt: LatticePoint) -> tuple[int, int, int]:
    p = region.B + region.M + region.C - 1 - pt.y
    q = pt.x
    return (p, q, region.s + 1 - p - q)


def tiling_to_paths(t: Tiling) -> PathFamily:
    """Trace the lattice path family of a tiling.

    Paths run through the midpoints of constant-z-coordinate cell edges;
    an x lozenge contributes a down step, a y lozenge a right step, and z
    lozenges form the background.
    """
    r = t.region
    traced: list[list[LatticePoint]] = []
    for i, m in enumerate(r.down_cells):
        if Monomial(m.i, m.j, m.k + 1) in r._up_index:
            continue  # interior edge in the z direction; not a path start
        pts = [_edge_point(r, (m.i, m.j, m.k + 1))]
        cur = i
        while True:
            axis = t.lozenge_axis(cur)
            if axis == "z":
                raise InternalCheckError("path ran into a background lozenge")
            n = r.up_cells[t.up_of[cur]]
            pts.append(_edge_point(r, n))
            below = Monomial(n.i, n.j, n.k - 1)
            nxt = r._down_index.get(below)
            if nxt is None:
                break
            cur = nxt
        traced.append(pts)

    start_of = {pt: idx for idx, pt in enumerate(r.starts)}
    end_of = {pt: idx for idx, pt in enumerate(r.ends)}
    if len(start_of) != len(r.starts) or len(end_of) != len(r.ends):
        raise InternalCheckError("endpoint coordinates collide")
    total = len(r.starts)
    paths: list[tuple[LatticePoint, ...] | None] = [None] * total
    lam: list[int | None] = [None] * total
    for pts in traced:
        i = start_of.get(pts[0])
        j = end_of.get(pts[-1])
        if i is None or j is None or paths[i] is not None:
            raise InternalCheckError("traced path does not join a start to an end")
        paths[i] = tuple(pts)
        lam[i] = j
    used_ends = set(x for x in lam if x is not None)
    for i in range(total):
        if paths[i] is None:
            # a start coinciding with an end carries an empty path
            j = end_of.get(r.starts[i])
            if j is None or j in used_ends:
                raise InternalCheckError("unmatched path start")
            used_ends.add(j)
            paths[i] = (r.starts[i],)
            lam[i] = j
    lam_t = tuple(lam)  # type: ignore[arg-type]

    C, M = r.C, r.M
    if M == 0:
        k = C
    else:
        k = C - sum(1 for i in range(C) if lam_t[i] != i)
    ok = all(lam_t[i] == i for i in range(k))
    ok = ok and all(lam_t[i] == M + i for i in range(k, C))
    ok = ok and all(lam_t[C + i2] == k + i2 for i2 in range(M))
    if not ok or not 0 <= k <= C:
        raise InternalCheckError("path permutation is not one of the admissible ones")
    return PathFamily(tuple(paths), lam_t, k)  # type: ignore[arg-type]


def paths_to_tiling(region: Region, family: PathFamily) -> Tiling:
    """Rebuild the tiling from its lattice path family."""
    up_of = [-1] * region.h
    for pts in family.paths:
        for a, b in zip(pts, pts[1:]):
            tri = _edge_triangle(region, a)
            below = Monomial(tri[0], tri[1], tri[2] - 1)
            n = _edge_triangle(region, b)
            i = region.down_index(below)
            j = region.up_index(n)
            if up_of[i] != -1:
                raise ParameterError("paths cover a cell twice")
            up_of[i] = j
    for i, m in enumerate(region.down_cells):
        if up_of[i] == -1:
            up_of[i] = region.up_index(Monomial(m.i, m.j, m.k + 1))
    return Tiling(region, up_of)


def rotate_triplet(t: Tiling, vertex) -> Tiling:
    """Flip the three lozenges around a grid vertex to the other matching.

    The six cells around the vertex must all lie in the region and be
    tiled by three lozenges among themselves; the rotated tiling has the
    same path permutation, and its matching differs by a 3-cycle.
    """
    u, v, w = vertex
    r = t.region
    if min(u, v, w) < 0 or u + v + w != r.s + 2:
        raise ParameterError("%r is not a grid vertex" % (vertex,))
    try:
        di = [
            r.down_index((u - 1, v - 1, w)),
            r.down_index((u - 1, v, w - 1)),
            r.down_index((u, v - 1, w - 1)),
        ]
        ui = [
            r.up_index((u - 1, v, w)),
            r.up_index((u, v - 1, w)),
            r.up_index((u, v, w - 1)),
        ]
    except ParameterError:
        raise ParameterError(
            "the six cells around %r are not all inside the region" % (vertex,)
        ) from None
    current = {di[0]: t.up_of[di[0]], di[1]: t.up_of[di[1]], di[2]: t.up_of[di[2]]}
    first = {di[0]: ui[1], di[1]: ui[0], di[2]: ui[2]}
    second = {di[0]: ui[0], di[1]: ui[2], di[2]: ui[1]}
    if current == first:
        replacement = second
    elif current == second:
        replacement = first
    else:
        raise ParameterError("the tiling does not pair these six cells together")
    up_of = list(t.up_of)
    for i, j in replacement.items():
        up_of[i] = j
    return Tiling(r, up_of)


def enumerate_tilings(region: Region, node_budget: int = NODE_BUDGET_DEFAULT):
    """Yield every lozenge tiling of the region, deterministically.

    Backtracking assigns the most constrained uncovered down cell first
    (ties broken by cell index), trying its up neighbors in index order.
    Every attempted assignment costs one node; exceeding node_budget
    raises BudgetExceededError instead of returning quietly.
    """
    if node_budget <= 0:
        raise ParameterError("node budget must be positive")
    h = region.h
    up_of = [-1] * h
    used = [False] * h
    nodes = 0

    def pick() -> int:
        best = -1
        best_free = None
        for i in range(h):
            if up_of[i] >= 0:
                continue
            free = sum(1 for j in region.ups_of_down[i] if not used[j])
            if best_free is None or free < best_free:
                best, best_free = i, free
                if free <= 1:
                    break
        return best

    if h == 0:
        yield Tiling(region, ())
        return

    frames: list[list] = [[pick(), None, -1]]
    frames[0][1] = iter(region.ups_of_down[frames[0][0]])
    while frames:
        frame = frames[-1]
        i, candidates, current = frame
        if current >= 0:
            up_of[i] = -1
            used[current] = False
            frame[2] = -1
        advanced = False
        for j in candidates:
            if used[j]:
                continue
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceededError(node_budget, nodes)
            up_of[i] = j
            used[j] = True
            frame[2] = j
            if len(frames) == h:
                yield Tiling(region, up_of)
            else:
                nxt = pick()
                frames.append([nxt, iter(region.ups_of_down[nxt]), -1])
            advanced = True
            break
        if not advanced:
            frames.pop()


@dataclass(frozen=True)
class SignedEnumeration:
    """Brute-force totals over all tilings of one region."""

    per_lambda_counts: dict[int, int]
    signed_total_paths: int
    signed_total_matchings: int
    unsigned_total: int
    sign_constant: int | None

    def __post_init__(self):
        object.__setattr__(self, "per_lambda_counts", dict(self.per_lambda_counts))


def signed_enumeration(
    p: AciParams, node_budget: int = NODE_BUDGET_DEFAULT
) -> SignedEnumeration:
    """Enumerate all tilings, bucketing by the path permutation index k.

    signed_total_paths carries the sign (-1)^(M(C-k)) per tiling and equals
    the degree map determinant; signed_total_matchings sums the matching
    signs instead.  The two differ by one region-wide sign constant, which
    is measured (not derived) and returned; it is None when the region has
    no tilings at all.
    """
    region = build_region(p)
    counts: dict[int, int] = {}
    signed_paths = 0
    signed_match = 0
    unsigned = 0
    constant = None
    for t in enumerate_tilings(region, node_budget):
        fam = tiling_to_paths(t)
        mat = tiling_to_matching(t)
        path_sign = fam.sign
        expected = -1 if (region.M * (region.C - fam.k)) % 2 else 1
        if path_sign != expected:
            raise InternalCheckError("path sign drifted from (-1)^(M(C-k))")
        counts[fam.k] = counts.get(fam.k, 0) + 1
        signed_paths += path_sign
        signed_match += mat.sign
        unsigned += 1
        ratio = mat.sign * path_sign
        if constant is None:
            constant = ratio
        elif constant != ratio:
            raise InternalCheckError("matching/path sign ratio varies across tilings")
    return SignedEnumeration(counts, signed_paths, signed_match, unsigned, constant)
