"""Built-in example programs for teaching and tests.

Every entry records its exact expected optimum (when one exists and the
stated pivot rule reaches it), so the catalog doubles as a regression
fixture. Names are stable; ``example("bogus")`` lists the valid ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import UnknownExample
from .model import LinearProgram, lp_new
from .simplex import PivotRule, SolveStatus


@dataclass(frozen=True)
class ExampleEntry:
    """A named program plus its teaching point and frozen expectations."""

    name: str
    lp: LinearProgram
    notes: str
    expected_status: SolveStatus = SolveStatus.OPTIMAL
    expected_value: Optional[Fraction] = None
    expected_point: Optional[tuple[Fraction, ...]] = None
    expected_rule: PivotRule = PivotRule.DANTZIG


def klee_minty(n: int) -> LinearProgram:
    """The classic worst case for the largest-coefficient rule.

    maximize   sum_j 2^(n-j) x_j
    subject to 2 * sum_{j<i} 2^(i-j) x_j + x_i <= 5^i   (i = 1..n)

    The region is a squashed n-cube with 2^n vertices; Dantzig's rule starts
    at the origin and visits every one of them before reaching the optimum
    5^n at (0, ..., 0, 5^n).
    """
    if n < 1:
        raise ValueError("klee_minty needs n >= 1")
    A = [
        [
            Fraction(2 ** (i - j + 1)) if j < i else (Fraction(1) if j == i else Fraction(0))
            for j in range(1, n + 1)
        ]
        for i in range(1, n + 1)
    ]
    b = [Fraction(5**i) for i in range(1, n + 1)]
    c = [Fraction(2 ** (n - j)) for j in range(1, n + 1)]
    return lp_new(A, b, c)


def _dodecahedron() -> LinearProgram:
    """Twelve face planes of a (rational) regular dodecahedron.

    Face normals are the three cyclic families (0, ±5, ±8), (±5, ±8, 0),
    (±8, 0, ±5) — the golden ratio rounded to 8/5 and scaled by 5 — all
    tangent to a sphere centered at (5, 5, 5). The solid sits strictly inside
    the positive orthant, so nonnegativity never binds and the region keeps
    exactly 12 facets, 20 vertices, and 30 edges.
    """
    normals: list[tuple[int, int, int]] = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            normals.append((0, 5 * s1, 8 * s2))
    for s1 in (1, -1):
        for s2 in (1, -1):
            normals.append((5 * s1, 8 * s2, 0))
    for s1 in (1, -1):
        for s2 in (1, -1):
            normals.append((8 * s1, 0, 5 * s2))
    center = (5, 5, 5)
    offset = 35
    b = [sum(nk * qk for nk, qk in zip(normal, center)) + offset for normal in normals]
    return lp_new(normals, b, [3, 5, 7])


def _build_catalog() -> dict[str, ExampleEntry]:
    F = Fraction
    entries = [
        ExampleEntry(
            name="lego_2d",
            lp=lp_new([[2, 2], [2, 1]], [8, 6], [16, 10]),
            notes="Two-product resource allocation; Dantzig reaches (2, 2) in two pivots.",
            expected_value=F(52),
            expected_point=(F(2), F(2)),
        ),
        ExampleEntry(
            name="klee_minty_2d",
            lp=klee_minty(2),
            notes="Klee-Minty squashed square; Dantzig walks all 4 corners.",
            expected_value=F(25),
            expected_point=(F(0), F(25)),
        ),
        ExampleEntry(
            name="klee_minty_3d",
            lp=klee_minty(3),
            notes="Klee-Minty squashed cube; Dantzig walks all 8 corners.",
            expected_value=F(125),
            expected_point=(F(0), F(0), F(125)),
        ),
        ExampleEntry(
            name="degenerate_2d",
            lp=lp_new([[0, 1], [1, 1]], [1, 1], [1, 2]),
            notes="Three constraints meet at (0, 1): the second pivot has ratio 0 "
            "and changes the basis without moving.",
            expected_value=F(2),
            expected_point=(F(0), F(1)),
        ),
        ExampleEntry(
            name="cycling_beale",
            lp=lp_new(
                [
                    [F(1, 2), F(-11, 2), F(-5, 2), F(9)],
                    [F(1, 2), F(-3, 2), F(-1, 2), F(1)],
                    [F(1), F(0), F(0), F(0)],
                ],
                [0, 0, 1],
                [10, -57, -9, -24],
            ),
            notes="Beale's instance: the largest-coefficient rule cycles through six "
            "bases forever; Bland's rule terminates at value 1.",
            expected_value=F(1),
            expected_point=(F(1), F(0), F(1), F(0)),
            expected_rule=PivotRule.BLAND,
        ),
        ExampleEntry(
            name="multiple_optima_2d",
            lp=lp_new([[1, 1], [1, 0], [0, 1]], [4, 3, 3], [1, 1]),
            notes="The objective is parallel to a facet: every point of the segment "
            "from (3, 1) to (1, 3) is optimal.",
            expected_value=F(4),
        ),
        ExampleEntry(
            name="phase1_needed_2d",
            lp=lp_new([[-1, -1], [1, 0], [0, 1]], [-1, 2, 2], [1, 1]),
            notes="The origin is infeasible (x1 + x2 >= 1), so an auxiliary phase "
            "finds a starting corner first.",
            expected_value=F(4),
            expected_point=(F(2), F(2)),
        ),
        ExampleEntry(
            name="unbounded_2d",
            lp=lp_new([[-1, 1], [1, -1]], [1, 1], [1, 1]),
            notes="A diagonal strip: the objective improves forever along (1, 1).",
            expected_status=SolveStatus.UNBOUNDED,
        ),
        ExampleEntry(
            name="integrality_2d",
            lp=lp_new([[1, 0], [0, 1], [1, 1]], [4, 3, 5], [2, 3]),
            notes="An interval (totally unimodular) system: every vertex is integral, "
            "so the relaxation already solves the integer program.",
            expected_value=F(13),
            expected_point=(F(2), F(3)),
        ),
        ExampleEntry(
            name="dodecahedron_3d",
            lp=_dodecahedron(),
            notes="A rational regular dodecahedron (20 vertices, 12 facets); its "
            "relaxation optimum is fractional, giving a real branching tree.",
            expected_value=F(1500, 13),
            expected_point=(F(100, 13), F(100, 13), F(100, 13)),
        ),
    ]
    return {e.name: e for e in entries}


_CATALOG = _build_catalog()


def example_names() -> list[str]:
    return list(_CATALOG)


def example(name: str) -> ExampleEntry:
    """Look up a built-in example; unknown names list the valid ones."""
    try:
        return _CATALOG[name]
    except KeyError:
        valid = ", ".join(example_names())
        raise UnknownExample(f"unknown example {name!r}; valid names: {valid}") from None
