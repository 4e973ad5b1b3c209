"""Dictionary-form simplex with exact arithmetic and full iteration traces.

The solver works on *dictionaries*: the m basic variables are expressed as
affine functions of the n nonbasic ones,

    x_B[i] = constants[i] + sum_j coeffs[i][j] * x_N[j]
    z      = objective_constant + sum_j objective_coeffs[j] * x_N[j]

and a pivot re-solves one row for the entering variable and substitutes. All
coefficients are Fractions, so every dictionary in a trace is exact; nothing
is ever rounded. Infeasible starts run a phase-one auxiliary program with a
single artificial variable (displayed as x0) that is pivoted in against the
most-negative right-hand side and driven back to zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .errors import PhaseOneRequired, SingularPivot
from .model import LinearProgram

ZERO = Fraction(0)
ONE = Fraction(1)


class PivotRule(str, Enum):
    """Entering-variable selection rule.

    Ties are always broken by lowest variable index, as is every leaving-row
    tie, so traces are fully deterministic.
    """

    DANTZIG = "dantzig"
    BLAND = "bland"
    GREATEST_INCREASE = "greatest_increase"


class SolveStatus(str, Enum):
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"
    INFEASIBLE = "infeasible"
    ITERATION_LIMIT = "iteration_limit"
    CYCLING_DETECTED = "cycling_detected"


@dataclass(frozen=True)
class Dictionary:
    """One simplex dictionary. Immutable; pivots build new instances.

    ``basic`` is kept in row-slot order (a pivot replaces the leaving
    variable in place), ``nonbasic`` in ascending variable order. Coefficient
    row i is aligned with ``nonbasic``.
    """

    basic: tuple[int, ...]
    nonbasic: tuple[int, ...]
    constants: tuple[Fraction, ...]
    coeffs: tuple[tuple[Fraction, ...], ...]
    objective_constant: Fraction
    objective_coeffs: tuple[Fraction, ...]

    @property
    def variables(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.basic) | set(self.nonbasic)))

    @property
    def is_feasible(self) -> bool:
        return all(const >= 0 for const in self.constants)

    def basic_solution(self) -> dict[int, Fraction]:
        """Variable values with every nonbasic variable pinned to zero."""
        values = {v: ZERO for v in self.nonbasic}
        values.update(zip(self.basic, self.constants))
        return values

    def solution_vector(self, count: int) -> tuple[Fraction, ...]:
        """Values of variables 0..count-1 (absent variables read as zero)."""
        values = self.basic_solution()
        return tuple(values.get(i, ZERO) for i in range(count))

    def objective_at(self, values: dict[int, Fraction]) -> Fraction:
        return self.objective_constant + sum(
            (c * values[v] for v, c in zip(self.nonbasic, self.objective_coeffs)),
            ZERO,
        )


@dataclass(frozen=True)
class Tableau:
    """Standard tableau layout of a dictionary.

    ``columns`` lists variable indices in ascending order; every row has
    len(columns)+1 entries, the last being the right-hand side. The objective
    row carries reduced costs (negated dictionary coefficients) and the
    current objective value in its last cell. Basic columns always form an
    identity submatrix.
    """

    columns: tuple[int, ...]
    basic: tuple[int, ...]
    objective_row: tuple[Fraction, ...]
    rows: tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class Iteration:
    """A dictionary state plus the pivot taken *from* it.

    ``entering``/``leaving`` are None on terminal states (an unbounded
    terminal keeps ``entering`` as the certificate ray). ``basic_solution``
    covers the n+m real variables; the artificial variable of a phase-one
    dictionary is visible in ``dictionary`` itself.
    """

    dictionary: Dictionary
    tableau: Tableau
    basic_solution: tuple[Fraction, ...]
    objective_value: Fraction
    entering: Optional[int]
    leaving: Optional[int]
    degenerate_step: bool


@dataclass(frozen=True)
class SimplexTrace:
    lp: LinearProgram
    phase1: Optional[tuple[Iteration, ...]]
    phase2: tuple[Iteration, ...]
    status: SolveStatus
    optimal_value: Optional[Fraction]

    @property
    def iterations(self) -> tuple[Iteration, ...]:
        return (self.phase1 or ()) + self.phase2

    @property
    def optimal_solution(self) -> Optional[tuple[Fraction, ...]]:
        """Decision-variable values at the optimum, when one was reached."""
        if self.status is not SolveStatus.OPTIMAL or not self.phase2:
            return None
        return self.phase2[-1].basic_solution[: self.lp.n]


@dataclass(frozen=True)
class PhaseOneResult:
    """Outcome of the auxiliary-program phase.

    ``dictionary`` is a feasible starting dictionary for the original
    program (artificial variable removed, objective restored) or None when
    the program is infeasible or the phase was cut short.
    """

    dictionary: Optional[Dictionary]
    iterations: tuple[Iteration, ...]
    status: SolveStatus


def artificial_index(lp: LinearProgram) -> int:
    """Internal index of the phase-one artificial variable (displayed x0)."""
    return lp.n + lp.m


def needs_phase_one(lp: LinearProgram) -> bool:
    return any(bi < 0 for bi in lp.b)


def default_iteration_limit(num_vars: int, num_rows: int) -> int:
    """Pivot cap: twice the number of possible bases."""
    return 2 * math.comb(num_vars, num_rows)


def initial_dictionary(lp: LinearProgram) -> Dictionary:
    """The all-slack starting dictionary.

    Raises :class:`PhaseOneRequired` when some b_i is negative, i.e. the
    origin is infeasible and phase one must construct a starting dictionary.
    """
    if needs_phase_one(lp):
        raise PhaseOneRequired(
            "origin is infeasible (negative right-hand side); run phase one"
        )
    return Dictionary(
        basic=tuple(range(lp.n, lp.n + lp.m)),
        nonbasic=tuple(range(lp.n)),
        constants=lp.b,
        coeffs=tuple(tuple(-a for a in row) for row in lp.A),
        objective_constant=ZERO,
        objective_coeffs=lp.c,
    )


def _min_ratio(d: Dictionary, entering: int) -> Optional[tuple[int, Fraction]]:
    """Leaving variable and ratio for the tightest row, or None if unbounded.

    Row i bounds the entering variable iff its coefficient is negative; the
    bound is constants[i] / -coeff. Ties pick the lowest basic variable index.
    """
    epos = d.nonbasic.index(entering)
    best: Optional[tuple[int, Fraction]] = None
    for bvar, const, row in zip(d.basic, d.constants, d.coeffs):
        a = row[epos]
        if a >= 0:
            continue
        ratio = const / -a
        if best is None or ratio < best[1] or (ratio == best[1] and bvar < best[0]):
            best = (bvar, ratio)
    return best


def choose_entering(d: Dictionary, rule: PivotRule = PivotRule.DANTZIG) -> Optional[int]:
    """Entering variable under ``rule``, or None when the dictionary is optimal."""
    rule = PivotRule(rule)
    candidates = [
        (var, coeff)
        for var, coeff in zip(d.nonbasic, d.objective_coeffs)
        if coeff > 0
    ]
    if not candidates:
        return None
    if rule is PivotRule.BLAND:
        return candidates[0][0]  # nonbasic is kept ascending
    if rule is PivotRule.DANTZIG:
        best_var, best_coeff = candidates[0]
        for var, coeff in candidates[1:]:
            if coeff > best_coeff:
                best_var, best_coeff = var, coeff
        return best_var
    # Greatest increase: exact objective gain coeff * ratio; an unbounded
    # candidate beats every finite gain.
    best_var: Optional[int] = None
    best_gain: Optional[Fraction] = None
    for var, coeff in candidates:
        hit = _min_ratio(d, var)
        if hit is None:
            return var  # first (lowest-index) unbounded candidate
        gain = coeff * hit[1]
        if best_gain is None or gain > best_gain:
            best_var, best_gain = var, gain
    return best_var


def choose_leaving(d: Dictionary, entering: int) -> Optional[int]:
    """Leaving variable by the exact minimum-ratio test; None means unbounded."""
    hit = _min_ratio(d, entering)
    return None if hit is None else hit[0]


def pivot(d: Dictionary, entering: int, leaving: int) -> Dictionary:
    """Exchange ``entering`` (nonbasic) and ``leaving`` (basic) exactly."""
    if entering not in d.nonbasic:
        raise ValueError(f"variable {entering} is not nonbasic")
    if leaving not in d.basic:
        raise ValueError(f"variable {leaving} is not basic")
    epos = d.nonbasic.index(entering)
    lrow = d.basic.index(leaving)
    a = d.coeffs[lrow][epos]
    if a == 0:
        raise SingularPivot(
            f"row of variable {leaving} has zero coefficient on variable {entering}"
        )

    new_nonbasic = tuple(sorted(set(d.nonbasic) - {entering} | {leaving}))

    # Solve the leaving row for the entering variable:
    #   x_l = C + a x_e + sum_j a_j x_j   =>
    #   x_e = -C/a + (1/a) x_l - sum_j (a_j/a) x_j
    old_row = dict(zip(d.nonbasic, d.coeffs[lrow]))
    e_const = -d.constants[lrow] / a
    e_coeffs = {
        v: (ONE / a if v == leaving else -old_row[v] / a) for v in new_nonbasic
    }

    def substitute(const: Fraction, row: Sequence[Fraction]) -> tuple[Fraction, tuple[Fraction, ...]]:
        coeff_of = dict(zip(d.nonbasic, row))
        weight = coeff_of.get(entering, ZERO)
        new_const = const + weight * e_const
        new_row = tuple(
            coeff_of.get(v, ZERO) + weight * e_coeffs[v] for v in new_nonbasic
        )
        return new_const, new_row

    constants: list[Fraction] = []
    rows: list[tuple[Fraction, ...]] = []
    for i in range(len(d.basic)):
        if i == lrow:
            constants.append(e_const)
            rows.append(tuple(e_coeffs[v] for v in new_nonbasic))
        else:
            const, row = substitute(d.constants[i], d.coeffs[i])
            constants.append(const)
            rows.append(row)
    obj_const, obj_row = substitute(d.objective_constant, d.objective_coeffs)

    basic = list(d.basic)
    basic[lrow] = entering
    return Dictionary(
        basic=tuple(basic),
        nonbasic=new_nonbasic,
        constants=tuple(constants),
        coeffs=tuple(rows),
        objective_constant=obj_const,
        objective_coeffs=obj_row,
    )


RecordFn = Callable[[Dictionary, Optional[int], Optional[int], bool], None]


def _optimize(
    d: Dictionary,
    rule: PivotRule,
    limit: int,
    record: RecordFn,
) -> tuple[SolveStatus, Dictionary, Optional[int]]:
    """Pivot until optimal/unbounded/limit/cycle.

    ``record`` is called once per *pivot step* (state plus the pivot taken
    from it); the terminal state is not recorded here — the third return
    value carries the entering variable of an unbounded terminal so the
    caller can record it.
    """
    seen = {frozenset(d.basic)}
    pivots = 0
    while True:
        entering = choose_entering(d, rule)
        if entering is None:
            return SolveStatus.OPTIMAL, d, None
        hit = _min_ratio(d, entering)
        if hit is None:
            return SolveStatus.UNBOUNDED, d, entering
        if pivots >= limit:
            return SolveStatus.ITERATION_LIMIT, d, None
        leaving, ratio = hit
        record(d, entering, leaving, ratio == 0)
        d = pivot(d, entering, leaving)
        pivots += 1
        if rule is not PivotRule.BLAND:
            basis = frozenset(d.basic)
            if basis in seen:
                return SolveStatus.CYCLING_DETECTED, d, None
            seen.add(basis)
    raise AssertionError("unreachable")


def _aux_dictionary(lp: LinearProgram) -> Dictionary:
    """Slack dictionary of the auxiliary program max -x0 s.t. Ax - x0 <= b."""
    art = artificial_index(lp)
    return Dictionary(
        basic=tuple(range(lp.n, lp.n + lp.m)),
        nonbasic=tuple(range(lp.n)) + (art,),
        constants=lp.b,
        coeffs=tuple(tuple(-a for a in row) + (ONE,) for row in lp.A),
        objective_constant=ZERO,
        objective_coeffs=tuple(ZERO for _ in range(lp.n)) + (-ONE,),
    )


def _restore_objective(d: Dictionary, lp: LinearProgram) -> Dictionary:
    """Drop the artificial column and rewrite z = c.x over the current basis."""
    art = artificial_index(lp)
    if art not in d.nonbasic:
        raise AssertionError("artificial variable must be nonbasic at restore time")
    keep = [j for j, v in enumerate(d.nonbasic) if v != art]
    nonbasic = tuple(d.nonbasic[j] for j in keep)
    coeffs = tuple(tuple(row[j] for j in keep) for row in d.coeffs)

    obj_const = ZERO
    obj = {v: ZERO for v in nonbasic}
    for v in nonbasic:
        if v < lp.n:
            obj[v] += lp.c[v]
    for bvar, const, row in zip(d.basic, d.constants, coeffs):
        if bvar < lp.n:
            cv = lp.c[bvar]
            if cv != 0:
                obj_const += cv * const
                for v, coeff in zip(nonbasic, row):
                    obj[v] += cv * coeff
    return Dictionary(
        basic=d.basic,
        nonbasic=nonbasic,
        constants=d.constants,
        coeffs=coeffs,
        objective_constant=obj_const,
        objective_coeffs=tuple(obj[v] for v in nonbasic),
    )


def phase_one(
    lp: LinearProgram,
    rule: PivotRule = PivotRule.DANTZIG,
    iteration_limit: Optional[int] = None,
) -> PhaseOneResult:
    """Run the single-artificial-variable auxiliary program.

    The auxiliary program maximizes -x0 subject to Ax - x0·1 <= b, x, x0 >= 0.
    Its slack dictionary is infeasible, but one pivot — x0 entering against
    the most-negative right-hand-side row — makes it feasible; from there the
    ordinary pivot loop runs under ``rule``. The program is infeasible exactly
    when the auxiliary optimum is negative (x0 cannot reach zero).

    Recorded iterations start at the first *feasible* auxiliary dictionary,
    so every recorded basic solution satisfies the auxiliary system exactly.
    """
    if not needs_phase_one(lp):
        raise ValueError("all right-hand sides are nonnegative; use initial_dictionary")
    rule = PivotRule(rule)
    art = artificial_index(lp)
    aux = _aux_dictionary(lp)

    # Most negative b row; ties by lowest slack index (row order).
    lrow = min(range(lp.m), key=lambda i: (aux.constants[i], aux.basic[i]))
    d = pivot(aux, art, aux.basic[lrow])
    assert d.is_feasible, "special phase-one pivot must produce a feasible dictionary"

    iterations: list[Iteration] = []

    def record(state: Dictionary, entering, leaving, degenerate) -> None:
        iterations.append(_make_iteration(lp, state, entering, leaving, degenerate))

    if iteration_limit is None:
        iteration_limit = default_iteration_limit(lp.n + lp.m + 1, lp.m)
    status, d, terminal_entering = _optimize(d, rule, iteration_limit, record)

    if status is not SolveStatus.OPTIMAL:
        record(d, terminal_entering, None, False)
        return PhaseOneResult(None, tuple(iterations), status)
    if d.objective_constant < 0:
        record(d, None, None, False)
        return PhaseOneResult(None, tuple(iterations), SolveStatus.INFEASIBLE)

    if art in d.basic:
        # x0 is basic at value zero; pivot it out on any nonzero coefficient
        # (lowest variable index), a ratio-0 step that keeps the point fixed.
        row = d.basic.index(art)
        assert d.constants[row] == 0
        entering = next(
            (v for v, a in zip(d.nonbasic, d.coeffs[row]) if a != 0), None
        )
        assert entering is not None, "artificial row cannot be identically zero"
        record(d, entering, art, True)
        d = pivot(d, entering, art)

    return PhaseOneResult(_restore_objective(d, lp), tuple(iterations), status)


def _make_iteration(
    lp: LinearProgram,
    d: Dictionary,
    entering: Optional[int],
    leaving: Optional[int],
    degenerate: bool,
) -> Iteration:
    return Iteration(
        dictionary=d,
        tableau=dictionary_to_tableau(d),
        basic_solution=d.solution_vector(lp.n + lp.m),
        objective_value=d.objective_constant,
        entering=entering,
        leaving=leaving,
        degenerate_step=degenerate,
    )


def simplex_solve(
    lp: LinearProgram,
    rule: PivotRule | str = PivotRule.DANTZIG,
    iteration_limit: Optional[int] = None,
) -> SimplexTrace:
    """Solve ``lp`` and return the full exact trace.

    Statuses: optimal, unbounded, infeasible (phase one certifies x0 > 0),
    iteration_limit (pivot cap hit; default 2·C(n+m, m) per phase), and
    cycling_detected (a basis repeated under dantzig/greatest_increase; bland
    never reports it).
    """
    rule = PivotRule(rule)
    phase1: Optional[tuple[Iteration, ...]] = None

    if needs_phase_one(lp):
        p1 = phase_one(lp, rule, iteration_limit)
        phase1 = p1.iterations
        if p1.status is not SolveStatus.OPTIMAL:
            return SimplexTrace(lp, phase1, (), p1.status, None)
        d = p1.dictionary
    else:
        d = initial_dictionary(lp)

    iterations: list[Iteration] = []

    def record(state: Dictionary, entering, leaving, degenerate) -> None:
        iterations.append(_make_iteration(lp, state, entering, leaving, degenerate))

    if iteration_limit is None:
        limit = default_iteration_limit(lp.n + lp.m, lp.m)
    else:
        limit = iteration_limit
    status, d, terminal_entering = _optimize(d, rule, limit, record)
    record(d, terminal_entering, None, False)

    optimal_value = d.objective_constant if status is SolveStatus.OPTIMAL else None
    return SimplexTrace(lp, phase1, tuple(iterations), status, optimal_value)


def dictionary_to_tableau(d: Dictionary) -> Tableau:
    """Rewrite a dictionary in standard tableau layout (exactly invertible)."""
    columns = d.variables
    basic_set = set(d.basic)
    nb_pos = {v: j for j, v in enumerate(d.nonbasic)}

    def var_entry(row: Optional[int], v: int) -> Fraction:
        if row is None:  # objective row
            return ZERO if v in basic_set else -d.objective_coeffs[nb_pos[v]]
        if v == d.basic[row]:
            return ONE
        if v in basic_set:
            return ZERO
        return -d.coeffs[row][nb_pos[v]]

    objective_row = tuple(var_entry(None, v) for v in columns) + (d.objective_constant,)
    rows = tuple(
        tuple(var_entry(i, v) for v in columns) + (d.constants[i],)
        for i in range(len(d.basic))
    )
    return Tableau(columns=columns, basic=d.basic, objective_row=objective_row, rows=rows)


def tableau_to_dictionary(t: Tableau) -> Dictionary:
    """Exact inverse of :func:`dictionary_to_tableau`."""
    basic_set = set(t.basic)
    nonbasic = tuple(v for v in t.columns if v not in basic_set)
    col = {v: j for j, v in enumerate(t.columns)}
    constants = tuple(row[-1] for row in t.rows)
    coeffs = tuple(
        tuple(-row[col[v]] for v in nonbasic) for row in t.rows
    )
    return Dictionary(
        basic=t.basic,
        nonbasic=nonbasic,
        constants=constants,
        coeffs=coeffs,
        objective_constant=t.objective_row[-1],
        objective_coeffs=tuple(-t.objective_row[col[v]] for v in nonbasic),
    )


def _format_affine(constant: Fraction, terms: Sequence[tuple[Fraction, str]]) -> str:
    parts = [str(constant)]
    for coeff, name in terms:
        if coeff == 0:
            continue
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        body = name if mag == 1 else f"{mag} {name}"
        parts.append(f"{sign} {body}")
    return " ".join(parts)


def format_dictionary(d: Dictionary, names: Sequence[str]) -> list[str]:
    """Render a dictionary as aligned text lines, objective first.

    ``names`` must cover every variable index appearing in the dictionary.
    """
    labels = ["z"] + [names[v] for v in d.basic]
    width = max(len(s) for s in labels)
    nb_names = [names[v] for v in d.nonbasic]
    lines = [
        f"{'z':<{width}} = "
        + _format_affine(d.objective_constant, list(zip(d.objective_coeffs, nb_names)))
    ]
    for bvar, const, row in zip(d.basic, d.constants, d.coeffs):
        lines.append(
            f"{names[bvar]:<{width}} = "
            + _format_affine(const, list(zip(row, nb_names)))
        )
    return lines


def format_tableau(t: Tableau, names: Sequence[str]) -> list[str]:
    """Render a tableau as an aligned text grid, objective row first."""
    header = [""] + [names[v] for v in t.columns] + ["rhs"]
    body = [["z"] + [str(x) for x in t.objective_row]]
    for bvar, row in zip(t.basic, t.rows):
        body.append([names[bvar]] + [str(x) for x in row])
    widths = [
        max(len(line[i]) for line in [header] + body) for i in range(len(header))
    ]

    def fmt(line: list[str]) -> str:
        cells = [f"{cell:>{widths[i]}}" for i, cell in enumerate(line)]
        return "  ".join(cells).rstrip()

    return [fmt(header)] + [fmt(line) for line in body]
