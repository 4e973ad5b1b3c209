"""Feasible-region geometry: vertices, edges, facets, and objective level sets.

Everything here is exact. Vertices are enumerated by brute force over all
n-subsets of the m+n bounding hyperplanes (constraint rows plus nonnegativity
planes), which is the right tool at teaching scale (n <= 3) and doubles as an
unambiguous ground truth for the simplex path.

Constraint identifiers: 0..m-1 are the rows of A, m+j is the nonnegativity
plane of decision variable j. The variable "behind" a constraint (the one that
is zero exactly when the constraint is tight) is the row's slack for rows and
the decision variable itself for bounds; bases at a vertex are derived from
that correspondence.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import DimensionUnsupported, EmptyRegion, VertexNotFound
from .model import LinearProgram
from .simplex import PivotRule, SimplexTrace, SolveStatus, simplex_solve

ZERO = Fraction(0)
ONE = Fraction(1)

Point = tuple[Fraction, ...]


@dataclass(frozen=True)
class Vertex:
    """A corner of the feasible region.

    ``tight`` holds every constraint identifier satisfied with equality;
    ``bases`` lists every basic-variable set (size m) whose basic solution is
    this point — more than one exactly when the vertex is degenerate.
    """

    id: int
    coords: Point
    full_solution: tuple[Fraction, ...]
    objective: Fraction
    tight: frozenset[int]
    bases: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class Facet:
    """An ordered vertex cycle lying on one bounding plane (n=3 only)."""

    constraint: Optional[int]
    vertices: tuple[int, ...]
    synthetic: bool = False


@dataclass(frozen=True)
class Polytope:
    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[int, int], ...]
    facets: tuple[Facet, ...]
    bounded: bool


@dataclass(frozen=True)
class LevelSet:
    """The slice of the region where the objective equals ``value``."""

    value: Fraction
    points: tuple[Point, ...]


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), ZERO)


def _sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Point:
    return tuple(a - b for a, b in zip(u, v))


def _cross(u: Sequence[Fraction], v: Sequence[Fraction]) -> Point:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def constraint_rows(lp: LinearProgram) -> list[tuple[Point, Fraction]]:
    """All bounding halfspaces as ``normal . x <= rhs`` pairs.

    Index i < m is row i of A; index m+j is -x_j <= 0.
    """
    rows: list[tuple[Point, Fraction]] = [(lp.A[i], lp.b[i]) for i in range(lp.m)]
    for j in range(lp.n):
        normal = tuple(-ONE if k == j else ZERO for k in range(lp.n))
        rows.append((normal, ZERO))
    return rows


def constraint_variable(lp: LinearProgram, cid: int) -> int:
    """The variable that is zero exactly when constraint ``cid`` is tight."""
    return lp.n + cid if cid < lp.m else cid - lp.m


def _solve_square(
    mat: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> Optional[Point]:
    """Exact solution of an n x n system, or None when singular."""
    n = len(rhs)
    aug = [list(mat[i]) + [rhs[i]] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        pivot_row = aug[col]
        pv = pivot_row[col]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col] / pv
                aug[r] = [a - f * b for a, b in zip(aug[r], pivot_row)]
    return tuple(aug[i][n] / aug[i][i] for i in range(n))


def _rank(vectors: Iterable[Sequence[Fraction]]) -> int:
    rows = [list(v) for v in vectors]
    if not rows:
        return 0
    width = len(rows[0])
    rank = 0
    for col in range(width):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][col]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / pv
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _check_dimension(n: int) -> None:
    if n not in (1, 2, 3):
        raise DimensionUnsupported(f"geometry supports 1-3 decision variables, got {n}")


def point_profile(
    lp: LinearProgram, coords: Point
) -> tuple[frozenset[int], tuple[frozenset[int], ...]]:
    """Tight constraints and bases of an arbitrary point of the region.

    The bases are every basic-variable set (size m) whose basic solution is
    ``coords``; a point where fewer than n constraints are tight (not a
    vertex) has none, a degenerate vertex has several.
    """
    rows = constraint_rows(lp)
    tight = frozenset(
        cid for cid, (normal, rhs) in enumerate(rows) if _dot(normal, coords) == rhs
    )
    all_vars = frozenset(range(lp.n + lp.m))
    bases: list[frozenset[int]] = []
    for subset in itertools.combinations(sorted(tight), lp.n):
        if _rank([rows[c][0] for c in subset]) == lp.n:
            nonbasic = frozenset(constraint_variable(lp, c) for c in subset)
            bases.append(all_vars - nonbasic)
    bases.sort(key=lambda s: tuple(sorted(s)))
    return tight, tuple(bases)


def enumerate_vertices(lp: LinearProgram) -> list[Vertex]:
    """All corners of {Ax <= b, x >= 0}, ordered lexicographically.

    Every n-subset of bounding hyperplanes is solved exactly; feasible unique
    solutions are grouped into vertices carrying their full tight set and all
    bases. Raises :class:`EmptyRegion` when the region has no point (a region
    in the nonnegative orthant is pointed, so no vertices means empty).
    """
    _check_dimension(lp.n)
    rows = constraint_rows(lp)
    points: dict[Point, None] = {}
    for subset in itertools.combinations(range(len(rows)), lp.n):
        x = _solve_square([rows[c][0] for c in subset], [rows[c][1] for c in subset])
        if x is None:
            continue
        if all(_dot(normal, x) <= rhs for normal, rhs in rows):
            points.setdefault(x, None)
    if not points:
        raise EmptyRegion("the feasible region is empty")

    vertices: list[Vertex] = []
    for vid, coords in enumerate(sorted(points)):
        tight, bases = point_profile(lp, coords)
        vertices.append(
            Vertex(
                id=vid,
                coords=coords,
                full_solution=lp.full_solution(coords),
                objective=lp.objective_value(coords),
                tight=tight,
                bases=bases,
            )
        )
    return vertices


def _edges(lp: LinearProgram, vertices: Sequence[Vertex]) -> tuple[tuple[int, int], ...]:
    """Vertex pairs whose common tight constraints span a line (rank n-1)."""
    rows = constraint_rows(lp)
    edges: list[tuple[int, int]] = []
    for u, v in itertools.combinations(vertices, 2):
        common = u.tight & v.tight
        if _rank([rows[c][0] for c in sorted(common)]) == lp.n - 1:
            edges.append((u.id, v.id))
    return tuple(edges)


def _plane_axes(normal: Point) -> tuple[Point, Point]:
    """Two exact in-plane axes orthogonal to ``normal`` (3D)."""
    u = _cross(normal, (ONE, ZERO, ZERO))
    if all(x == 0 for x in u):
        u = _cross(normal, (ZERO, ONE, ZERO))
    return u, _cross(normal, u)


def _angular_order(
    items: Sequence[tuple[Point, object]],
    centroid: Point,
    normal: Optional[Point],
) -> list:
    """Order items by exact angle around ``centroid`` in the given plane.

    ``normal`` is None for 2D points (use the coordinate plane itself). The
    comparator is the classic quadrant-then-cross-product test; no floats.
    """
    if normal is None:
        planar = [((p[0] - centroid[0], p[1] - centroid[1]), item) for p, item in items]
    else:
        u, w = _plane_axes(normal)
        planar = [
            ((_dot(u, _sub(p, centroid)), _dot(w, _sub(p, centroid))), item)
            for p, item in items
        ]

    def half(ab: tuple[Fraction, Fraction]) -> int:
        a, b = ab
        return 0 if (b > 0 or (b == 0 and a > 0)) else 1

    def compare(x, y) -> int:
        (a1, b1), (a2, b2) = x[0], y[0]
        h1, h2 = half(x[0]), half(y[0])
        if h1 != h2:
            return -1 if h1 < h2 else 1
        cross = a1 * b2 - a2 * b1
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        return 0

    return [item for _, item in sorted(planar, key=functools.cmp_to_key(compare))]


def _centroid(points: Sequence[Point]) -> Point:
    k = Fraction(len(points))
    return tuple(sum(col, ZERO) / k for col in zip(*points))


def _facets(lp: LinearProgram, vertices: Sequence[Vertex]) -> tuple[Facet, ...]:
    """One ordered vertex cycle per plane that bounds a two-dimensional face."""
    rows = constraint_rows(lp)
    facets: list[Facet] = []
    for cid, (normal, _) in enumerate(rows):
        on_plane = [v for v in vertices if cid in v.tight]
        if len(on_plane) < 3:
            continue
        base = on_plane[0].coords
        if _rank([_sub(v.coords, base) for v in on_plane[1:]]) != 2:
            continue
        ordered = _angular_order(
            [(v.coords, v.id) for v in on_plane],
            _centroid([v.coords for v in on_plane]),
            normal,
        )
        facets.append(Facet(constraint=cid, vertices=tuple(ordered)))
    return tuple(facets)


def is_bounded(lp: LinearProgram) -> bool:
    """Whether the region is bounded, via an exact recession test.

    Inside the nonnegative orthant the region is bounded iff maximizing
    x1 + ... + xn is bounded. Bland's rule guarantees termination.
    """
    probe = LinearProgram(
        A=lp.A, b=lp.b, c=tuple(ONE for _ in range(lp.n)),
        variable_names=lp.variable_names,
    )
    trace = simplex_solve(probe, PivotRule.BLAND)
    if trace.status is SolveStatus.INFEASIBLE:
        raise EmptyRegion("the feasible region is empty")
    return trace.status is SolveStatus.OPTIMAL


def polytope_of(lp: LinearProgram) -> Polytope:
    """Vertices, edges, and (bounded 3D only) facets of the region.

    Unbounded regions keep their full vertex/edge skeleton but no facets.
    """
    _check_dimension(lp.n)
    vertices = enumerate_vertices(lp)
    bounded = is_bounded(lp)
    edges = _edges(lp, vertices)
    facets: tuple[Facet, ...] = ()
    if lp.n == 3 and bounded:
        facets = _facets(lp, vertices)
    return Polytope(
        vertices=tuple(vertices), edges=edges, facets=facets, bounded=bounded
    )


def objective_levels(
    lp: LinearProgram, polytope: Polytope, tick_count: int = 10
) -> list[LevelSet]:
    """Evenly spaced objective values with their exact level-set geometry.

    Values run from the minimum to the maximum of c.x over the vertices. A
    zero objective (or a region lying in a single level plane) collapses to
    one entry containing every vertex.
    """
    if not polytope.bounded:
        raise ValueError("level sets need a bounded region")
    objectives = [v.objective for v in polytope.vertices]
    lo, hi = min(objectives), max(objectives)
    if lo == hi:
        points = [(v.coords, v.coords) for v in polytope.vertices]
        if lp.n == 2 and len(points) > 2:
            ordered = _angular_order(points, _centroid([p for p, _ in points]), None)
        else:
            ordered = sorted(p for p, _ in points)
        return [LevelSet(value=lo, points=tuple(ordered))]
    if tick_count < 2:
        raise ValueError("tick_count must be at least 2")

    by_id = {v.id: v for v in polytope.vertices}
    levels: list[LevelSet] = []
    for k in range(tick_count):
        value = lo + Fraction(k, tick_count - 1) * (hi - lo)
        points: set[Point] = {
            v.coords for v in polytope.vertices if v.objective == value
        }
        for i, j in polytope.edges:
            u, v = by_id[i], by_id[j]
            cu, cv = u.objective, v.objective
            if (cu < value < cv) or (cv < value < cu):
                lam = (value - cu) / (cv - cu)
                points.add(
                    tuple(a + lam * (b - a) for a, b in zip(u.coords, v.coords))
                )
        ordered = _order_section(list(points))
        levels.append(LevelSet(value=value, points=tuple(ordered)))
    return levels


def _order_section(points: list[Point]) -> list[Point]:
    """Deterministic boundary order for a level-set slice."""
    if len(points) <= 2:
        return sorted(points)
    base = points[0]
    if _rank([_sub(p, base) for p in points[1:]]) <= 1:
        return sorted(points)
    # A genuine polygon: only possible for 3D sections.
    normal = _section_normal(points)
    return _angular_order([(p, p) for p in points], _centroid(points), normal)


def _section_normal(points: Sequence[Point]) -> Point:
    base = points[0]
    u = _sub(points[1], base)
    for q in points[2:]:
        normal = _cross(u, _sub(q, base))
        if any(x != 0 for x in normal):
            return normal
    raise AssertionError("collinear points cannot form a section polygon")


def trace_path(trace: SimplexTrace, polytope: Polytope) -> list[int]:
    """Vertex ids visited by the phase-2 iterations, repeats preserved.

    Degenerate pivots show up as consecutive repeated ids. Raises
    :class:`VertexNotFound` if an iteration's basic solution is not a vertex
    of ``polytope`` — with exact arithmetic that means the polytope belongs
    to a different program than the trace.
    """
    n = trace.lp.n
    by_coords = {v.coords: v.id for v in polytope.vertices}
    path: list[int] = []
    for it in trace.phase2:
        coords = it.basic_solution[:n]
        if coords not in by_coords:
            raise VertexNotFound(f"trace point {coords} is not a polytope vertex")
        path.append(by_coords[coords])
    return path
