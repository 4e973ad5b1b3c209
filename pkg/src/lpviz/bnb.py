"""LP-based branch and bound with full per-node relaxation traces.

Each node solves its relaxation from scratch with the dictionary simplex, so
every node carries a complete simplex trace (and, for n <= 3, the geometry of
its shrunken region) for visualization. Exploration is depth-first with the
floor child first; branching bounds are appended to the program as ordinary
rows, which keeps every child region a subset of its parent's by construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .errors import NodeLimitExceeded, NotFractional, UnboundedRelaxation
from .geometry import Polytope, polytope_of
from .model import LinearProgram, NumberLike, rat
from .simplex import PivotRule, SimplexTrace, SolveStatus, simplex_solve

ZERO = Fraction(0)
ONE = Fraction(1)


class NodeStatus(str, Enum):
    BRANCHED = "branched"
    INTEGRAL = "integral"
    PRUNED_BY_BOUND = "pruned_by_bound"
    INFEASIBLE = "infeasible"


class BranchRule(str, Enum):
    MOST_FRACTIONAL = "most_fractional"
    LOWEST_INDEX = "lowest_index"


@dataclass(frozen=True)
class Bound:
    """One branching bound, e.g. x2 <= 1 or x2 >= 2."""

    var: int
    sense: str  # "<=" or ">="
    value: Fraction

    def as_row(self, n: int) -> tuple[tuple[Fraction, ...], Fraction]:
        """The bound as an ``a . x <= rhs`` row over n decision variables."""
        if self.sense == "<=":
            normal = tuple(ONE if j == self.var else ZERO for j in range(n))
            return normal, self.value
        normal = tuple(-ONE if j == self.var else ZERO for j in range(n))
        return normal, -self.value

    def label(self, name: str) -> str:
        symbol = "≤" if self.sense == "<=" else "≥"
        return f"{name} {symbol} {self.value}"


def branch_bounds(var: int, value: NumberLike) -> tuple[Bound, Bound]:
    """The floor/ceil bound pair for branching on ``var`` at ``value``.

    Raises :class:`NotFractional` when the value is already an integer.
    """
    v = rat(value)
    if v.denominator == 1:
        raise NotFractional(f"value {v} is integral; nothing to branch on")
    return (
        Bound(var=var, sense="<=", value=Fraction(math.floor(v))),
        Bound(var=var, sense=">=", value=Fraction(math.ceil(v))),
    )


@dataclass
class BnbNode:
    """One explored node: relaxation trace plus branching metadata.

    ``added_bounds`` is the accumulated bound list from the root (the node's
    program is the base program plus those rows); ``branch_pair`` is set only
    on branched nodes and holds the two bounds that split them.
    """

    id: int
    parent: Optional[int]
    lp: LinearProgram
    added_bounds: tuple[Bound, ...]
    trace: SimplexTrace
    status: NodeStatus
    polytope: Optional[Polytope] = None
    branch_pair: Optional[tuple[Bound, Bound]] = None

    @property
    def relaxation_value(self) -> Optional[Fraction]:
        return self.trace.optimal_value

    @property
    def relaxation_solution(self) -> Optional[tuple[Fraction, ...]]:
        return self.trace.optimal_solution


@dataclass(frozen=True)
class IncumbentRecord:
    node: int
    solution: tuple[Fraction, ...]
    value: Fraction


@dataclass(frozen=True)
class BnbTrace:
    lp: LinearProgram
    nodes: tuple[BnbNode, ...]
    incumbent_history: tuple[IncumbentRecord, ...]

    @property
    def optimal(self) -> Optional[IncumbentRecord]:
        """The best integral solution found, or None when none exists."""
        return self.incumbent_history[-1] if self.incumbent_history else None


def _is_integral(value: Fraction) -> bool:
    return value.denominator == 1


def _pick_branch_variable(
    solution: Sequence[Fraction], candidates: Sequence[int], rule: BranchRule
) -> Optional[int]:
    fractional = [j for j in candidates if not _is_integral(solution[j])]
    if not fractional:
        return None
    if rule is BranchRule.LOWEST_INDEX:
        return fractional[0]
    # Most fractional: largest distance to the nearest integer, ties lowest index.
    def distance(j: int) -> Fraction:
        frac = solution[j] - math.floor(solution[j])
        return min(frac, 1 - frac)

    best = fractional[0]
    best_d = distance(best)
    for j in fractional[1:]:
        d = distance(j)
        if d > best_d:
            best, best_d = j, d
    return best


def branch_and_bound(
    lp: LinearProgram,
    branch_rule: BranchRule | str = BranchRule.MOST_FRACTIONAL,
    exploration: str = "depth_first_floor_first",
    pivot_rule: PivotRule | str = PivotRule.DANTZIG,
    node_limit: int = 1000,
    integer_indices: Optional[Sequence[int]] = None,
    with_geometry: bool = True,
) -> BnbTrace:
    """Solve ``lp`` with all (or ``integer_indices``) variables integral.

    Nodes are explored depth-first, floor child first; node ids follow
    exploration order. A node is pruned when its relaxation optimum is <= the
    incumbent value (ties pruned). Geometry snapshots are attached for n <= 3
    unless ``with_geometry`` is false.

    Raises :class:`UnboundedRelaxation` if the root relaxation is unbounded
    (the integer program is then unbounded or infeasible — there is nothing
    to branch on) and :class:`NodeLimitExceeded`, carrying the partial trace,
    when more than ``node_limit`` nodes would be explored.
    """
    branch_rule = BranchRule(branch_rule)
    pivot_rule = PivotRule(pivot_rule)
    if exploration != "depth_first_floor_first":
        raise ValueError(f"unknown exploration order: {exploration!r}")
    candidates = tuple(range(lp.n)) if integer_indices is None else tuple(integer_indices)

    nodes: list[BnbNode] = []
    history: list[IncumbentRecord] = []
    incumbent: Optional[IncumbentRecord] = None
    # Stack of (parent id, accumulated bounds); ceil pushed first so the
    # floor child is explored first.
    stack: list[tuple[Optional[int], tuple[Bound, ...]]] = [(None, ())]

    def partial() -> BnbTrace:
        return BnbTrace(lp=lp, nodes=tuple(nodes), incumbent_history=tuple(history))

    while stack:
        parent, bounds = stack.pop()
        if len(nodes) >= node_limit:
            raise NodeLimitExceeded(
                f"node limit {node_limit} reached with work remaining", partial()
            )
        node_lp = lp.with_rows(b.as_row(lp.n) for b in bounds) if bounds else lp
        trace = simplex_solve(node_lp, pivot_rule)
        node = BnbNode(
            id=len(nodes),
            parent=parent,
            lp=node_lp,
            added_bounds=bounds,
            trace=trace,
            status=NodeStatus.INFEASIBLE,
        )
        nodes.append(node)

        if trace.status is SolveStatus.UNBOUNDED:
            raise UnboundedRelaxation(
                "root relaxation is unbounded; the integer program is ill-posed"
            )
        if with_geometry and lp.n <= 3 and trace.status is not SolveStatus.INFEASIBLE:
            node.polytope = polytope_of(node_lp)
        if trace.status is SolveStatus.INFEASIBLE:
            continue
        if trace.status is not SolveStatus.OPTIMAL:
            raise AssertionError(f"relaxation ended with {trace.status}")

        value = trace.optimal_value
        solution = trace.optimal_solution
        if incumbent is not None and value <= incumbent.value:
            node.status = NodeStatus.PRUNED_BY_BOUND
            continue
        var = _pick_branch_variable(solution, candidates, branch_rule)
        if var is None:
            node.status = NodeStatus.INTEGRAL
            incumbent = IncumbentRecord(node=node.id, solution=solution, value=value)
            history.append(incumbent)
            continue
        floor_bound, ceil_bound = branch_bounds(var, solution[var])
        node.status = NodeStatus.BRANCHED
        node.branch_pair = (floor_bound, ceil_bound)
        stack.append((node.id, bounds + (ceil_bound,)))
        stack.append((node.id, bounds + (floor_bound,)))

    return partial()
