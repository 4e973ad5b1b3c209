import random
from fractions import Fraction
from math import comb

import pytest

from lpviz.errors import PhaseOneRequired, SingularPivot
from lpviz.examples import example, example_names, klee_minty
from lpviz.model import lp_new
from lpviz.simplex import (
    PivotRule,
    SolveStatus,
    artificial_index,
    choose_entering,
    default_iteration_limit,
    dictionary_to_tableau,
    initial_dictionary,
    needs_phase_one,
    phase_one,
    pivot,
    simplex_solve,
    tableau_to_dictionary,
)

from .oracles import oracle_vertices, seeded_suite

F = Fraction


def solved_examples():
    """(name, entry, trace) for every catalog entry under its expected rule."""
    out = []
    for name in example_names():
        entry = example(name)
        out.append((name, entry, simplex_solve(entry.lp, entry.expected_rule)))
    return out


class TestLegoChainFrozen:
    """The two-pivot walk of the resource-allocation example, value by value."""

    def setup_method(self):
        self.trace = simplex_solve(example("lego_2d").lp)

    def test_shape(self):
        t = self.trace
        assert t.status is SolveStatus.OPTIMAL
        assert t.phase1 is None
        assert len(t.phase2) == 3
        assert t.optimal_value == 52
        assert t.optimal_solution == (2, 2)

    def test_iteration_0(self):
        it = self.trace.phase2[0]
        d = it.dictionary
        assert d.basic == (2, 3)
        assert d.nonbasic == (0, 1)
        assert d.constants == (8, 6)
        assert d.coeffs == ((-2, -2), (-2, -1))
        assert d.objective_constant == 0
        assert d.objective_coeffs == (16, 10)
        assert it.basic_solution == (0, 0, 8, 6)
        assert it.objective_value == 0
        assert (it.entering, it.leaving, it.degenerate_step) == (0, 3, False)

    def test_iteration_1(self):
        it = self.trace.phase2[1]
        d = it.dictionary
        assert d.basic == (2, 0)
        assert d.nonbasic == (1, 3)
        assert d.constants == (2, 3)
        assert d.coeffs == ((-1, 1), (F(-1, 2), F(-1, 2)))
        assert d.objective_constant == 48
        assert d.objective_coeffs == (2, -8)
        assert it.basic_solution == (3, 0, 2, 0)
        assert (it.entering, it.leaving, it.degenerate_step) == (1, 2, False)

    def test_iteration_2_terminal(self):
        it = self.trace.phase2[2]
        d = it.dictionary
        assert d.basic == (1, 0)
        assert d.nonbasic == (2, 3)
        assert d.constants == (2, 2)
        assert d.coeffs == ((-1, 1), (F(1, 2), -1))
        assert d.objective_constant == 52
        assert d.objective_coeffs == (-2, -6)
        assert it.basic_solution == (2, 2, 0, 0)
        assert (it.entering, it.leaving) == (None, None)

    def test_tableau_objective_rows(self):
        first = self.trace.phase2[0].tableau
        last = self.trace.phase2[2].tableau
        assert first.columns == (0, 1, 2, 3)
        assert first.objective_row == (-16, -10, 0, 0, 0)
        assert first.rows == ((2, 2, 1, 0, 8), (2, 1, 0, 1, 6))
        assert last.objective_row == (0, 0, 2, 6, 52)


class TestPhaseOneFrozen:
    """Auxiliary phase on a program whose origin is infeasible."""

    def setup_method(self):
        self.entry = example("phase1_needed_2d")
        self.trace = simplex_solve(self.entry.lp)

    def test_needs_phase_one(self):
        assert needs_phase_one(self.entry.lp)
        assert not needs_phase_one(example("lego_2d").lp)
        with pytest.raises(PhaseOneRequired):
            initial_dictionary(self.entry.lp)

    def test_single_recorded_auxiliary_iteration(self):
        # The special first pivot (artificial in, most-negative row out) is
        # not recorded; recording starts at the first feasible dictionary.
        assert self.trace.phase1 is not None
        assert len(self.trace.phase1) == 1
        it = self.trace.phase1[0]
        art = artificial_index(self.entry.lp)
        assert art == 5
        assert it.dictionary.basic == (5, 3, 4)
        assert it.basic_solution == (0, 0, 0, 3, 3)
        assert it.dictionary.basic_solution()[art] == 1
        assert it.objective_value == -1
        assert (it.entering, it.leaving, it.degenerate_step) == (0, 5, False)

    def test_phase_two_continues_to_optimum(self):
        t = self.trace
        assert t.status is SolveStatus.OPTIMAL
        assert [it.basic_solution[:2] for it in t.phase2] == [
            (1, 0),
            (2, 0),
            (2, 2),
        ]
        assert [it.objective_value for it in t.phase2] == [1, 2, 4]
        assert t.optimal_value == 4
        assert t.optimal_solution == (2, 2)

    def test_phase_one_result_object(self):
        res = phase_one(self.entry.lp)
        assert res.status is SolveStatus.OPTIMAL
        assert res.dictionary is not None
        assert artificial_index(self.entry.lp) not in res.dictionary.variables
        # z = c.x rewritten over the starting basis: value 1 at (1, 0).
        assert res.dictionary.objective_constant == 1

    def test_phase_one_rejects_feasible_origin(self):
        with pytest.raises(ValueError):
            phase_one(example("lego_2d").lp)


class TestInfeasibleCertificate:
    def test_negative_auxiliary_optimum(self):
        lp = lp_new([[1, 1], [-1, -1]], [1, -3], [1, 1])
        trace = simplex_solve(lp)
        assert trace.status is SolveStatus.INFEASIBLE
        assert trace.phase2 == ()
        assert trace.optimal_value is None
        assert trace.optimal_solution is None
        assert len(trace.phase1) == 2
        assert [it.objective_value for it in trace.phase1] == [-3, -1]
        last = trace.phase1[-1]
        assert (last.entering, last.leaving) == (None, None)
        # The artificial variable is stuck at 1 > 0: the certificate.
        assert last.dictionary.basic_solution()[artificial_index(lp)] == 1


class TestDegenerateStep:
    def test_zero_ratio_pivot_flagged(self):
        trace = simplex_solve(example("degenerate_2d").lp)
        assert trace.status is SolveStatus.OPTIMAL
        assert len(trace.phase2) == 3
        flags = [it.degenerate_step for it in trace.phase2]
        assert flags == [False, True, False]
        # The degenerate pivot changes the basis but not the point.
        a, b = trace.phase2[1], trace.phase2[2]
        assert a.basic_solution == b.basic_solution == (0, 1, 0, 0)
        assert a.dictionary.basic != b.dictionary.basic
        assert (a.entering, a.leaving) == (0, 3)
        assert trace.optimal_value == 2

    def test_ratio_tie_breaks_to_lowest_basic_index(self):
        # First pivot of the same program ties at ratio 1 in both rows.
        trace = simplex_solve(example("degenerate_2d").lp)
        assert (trace.phase2[0].entering, trace.phase2[0].leaving) == (1, 2)


class TestCyclingAndBland:
    def test_largest_coefficient_cycles(self):
        entry = example("cycling_beale")
        trace = simplex_solve(entry.lp, PivotRule.DANTZIG)
        assert trace.status is SolveStatus.CYCLING_DETECTED
        assert trace.optimal_value is None
        assert len(trace.phase2) == 7
        bases = [it.dictionary.basic for it in trace.phase2]
        assert bases == [
            (4, 5, 6),
            (0, 5, 6),
            (0, 1, 6),
            (2, 1, 6),
            (2, 3, 6),
            (4, 3, 6),
            (4, 5, 6),
        ]
        # The terminal state is the exact dictionary already seen.
        assert trace.phase2[-1].dictionary == trace.phase2[0].dictionary
        # Every pivot is degenerate: the point never moves off the origin.
        assert all(it.degenerate_step for it in trace.phase2[:-1])
        assert all(it.objective_value == 0 for it in trace.phase2)

    def test_lowest_index_rule_terminates(self):
        entry = example("cycling_beale")
        trace = simplex_solve(entry.lp, PivotRule.BLAND)
        assert trace.status is SolveStatus.OPTIMAL
        assert trace.optimal_value == 1
        assert trace.optimal_solution == (1, 0, 1, 0)
        assert len(trace.phase2) == 8
        bases = [frozenset(it.dictionary.basic) for it in trace.phase2]
        assert len(set(bases)) == len(bases)

    def test_bland_never_repeats_a_basis_on_any_example(self):
        for name in example_names():
            trace = simplex_solve(example(name).lp, PivotRule.BLAND)
            for phase in (trace.phase1 or (), trace.phase2):
                bases = [frozenset(it.dictionary.basic) for it in phase]
                assert len(set(bases)) == len(bases), name


class TestKleeMintyWalk:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_dantzig_visits_every_corner(self, n):
        lp = klee_minty(n)
        trace = simplex_solve(lp, PivotRule.DANTZIG)
        assert trace.status is SolveStatus.OPTIMAL
        assert trace.optimal_value == 5**n
        assert trace.optimal_solution == (F(0),) * (n - 1) + (F(5**n),)
        corners = {it.basic_solution[:n] for it in trace.phase2}
        assert len(corners) == 2**n
        assert len(trace.phase2) == 2**n  # no corner is visited twice

    def test_coefficients_frozen_n3(self):
        lp = klee_minty(3)
        assert lp.c == (4, 2, 1)
        assert lp.A == ((1, 0, 0), (4, 1, 0), (8, 4, 1))
        assert lp.b == (5, 25, 125)

    def test_rejects_nonpositive_size(self):
        with pytest.raises(ValueError):
            klee_minty(0)


class TestGreatestIncrease:
    def test_picks_larger_gain_not_larger_coefficient(self):
        lp = lp_new([[1, 0], [0, 1]], [1, 100], [3, 2])
        d = initial_dictionary(lp)
        assert choose_entering(d, PivotRule.DANTZIG) == 0  # coefficient 3
        # Gains: x1 gives 3*1 = 3, x2 gives 2*100 = 200.
        assert choose_entering(d, PivotRule.GREATEST_INCREASE) == 1

    def test_unbounded_direction_wins(self):
        # x2 has no binding row, so its gain is infinite.
        lp = lp_new([[1, 0]], [1], [1, 2])
        d = initial_dictionary(lp)
        assert choose_entering(d, PivotRule.GREATEST_INCREASE) == 1
        trace = simplex_solve(lp, PivotRule.GREATEST_INCREASE)
        assert trace.status is SolveStatus.UNBOUNDED
        last = trace.phase2[-1]
        assert last.entering == 1 and last.leaving is None

    def test_matches_optimum_on_catalog(self):
        for name in example_names():
            entry = example(name)
            if entry.expected_status is not SolveStatus.OPTIMAL:
                continue
            trace = simplex_solve(entry.lp, PivotRule.GREATEST_INCREASE)
            if trace.status is SolveStatus.OPTIMAL:
                assert trace.optimal_value == entry.expected_value, name


class TestUnbounded:
    def test_strip_reports_unbounded(self):
        trace = simplex_solve(example("unbounded_2d").lp)
        assert trace.status is SolveStatus.UNBOUNDED
        assert trace.optimal_value is None
        last = trace.phase2[-1]
        assert last.entering is not None and last.leaving is None


class TestIterationLimit:
    def test_limit_is_a_status_not_an_error(self):
        trace = simplex_solve(example("lego_2d").lp, iteration_limit=1)
        assert trace.status is SolveStatus.ITERATION_LIMIT
        assert trace.optimal_value is None
        assert len(trace.phase2) == 2  # one pivot plus the cut-off state

    def test_default_limit_formula(self):
        assert default_iteration_limit(4, 2) == 2 * comb(4, 2)
        assert default_iteration_limit(7, 3) == 2 * comb(7, 3)


class TestPivotMechanics:
    def test_zero_coefficient_rejected(self):
        d = initial_dictionary(example("degenerate_2d").lp)
        # x1 does not appear in the first row (x3 = 1 - x2).
        with pytest.raises(SingularPivot):
            pivot(d, 0, 2)

    def test_membership_checked(self):
        d = initial_dictionary(example("lego_2d").lp)
        with pytest.raises(ValueError):
            pivot(d, 2, 3)  # entering variable is basic
        with pytest.raises(ValueError):
            pivot(d, 0, 1)  # leaving variable is nonbasic

    def test_pivot_is_an_involution_with_roles_swapped(self):
        d = initial_dictionary(example("lego_2d").lp)
        assert pivot(pivot(d, 0, 3), 3, 0) == d


class TestTableauRoundTrip:
    def test_every_recorded_iteration_round_trips(self):
        for name, _entry, trace in solved_examples():
            for it in trace.iterations:
                d = it.dictionary
                t = dictionary_to_tableau(d)
                assert t == it.tableau, name
                assert tableau_to_dictionary(t) == d, name

    def test_tableau_shape(self):
        t = simplex_solve(example("lego_2d").lp).phase2[0].tableau
        width = len(t.columns) + 1
        assert len(t.objective_row) == width
        assert all(len(row) == width for row in t.rows)
        # Basic columns form an identity pattern.
        for i, row in enumerate(t.rows):
            for j, v in enumerate(t.columns):
                if v in t.basic:
                    assert row[j] == (1 if v == t.basic[i] else 0)


class TestTraceInvariants:
    """Structural properties every exact trace must satisfy."""

    def test_objective_monotone_along_phase_two(self):
        for name, _entry, trace in solved_examples():
            for prev, nxt in zip(trace.phase2, trace.phase2[1:]):
                if prev.degenerate_step:
                    assert nxt.objective_value == prev.objective_value, name
                else:
                    assert nxt.objective_value > prev.objective_value, name

    def test_consecutive_bases_swap_exactly_one_variable(self):
        for name, _entry, trace in solved_examples():
            for phase in (trace.phase1 or (), trace.phase2):
                for prev, nxt in zip(phase, phase[1:]):
                    before = set(prev.dictionary.basic)
                    after = set(nxt.dictionary.basic)
                    assert after == (before - {prev.leaving}) | {prev.entering}, name

    def test_terminal_iterations_have_no_leaving_variable(self):
        for name, _entry, trace in solved_examples():
            if trace.phase2:
                assert trace.phase2[-1].leaving is None, name
                for it in trace.phase2[:-1]:
                    assert it.entering is not None and it.leaving is not None, name

    def test_dictionaries_preserve_the_solution_set(self):
        # Any feasible point, written in full (decision + slack) form, must
        # satisfy every recorded phase-two dictionary row exactly, and the
        # rewritten objective must agree with c.x.
        rng = random.Random(20260816)
        for name in ("lego_2d", "klee_minty_3d", "degenerate_2d", "integrality_2d"):
            lp = example(name).lp
            verts = sorted(oracle_vertices(lp.A, lp.b, lp.n))
            trace = simplex_solve(lp)
            points = [tuple(map(F, v)) for v in verts]
            for _ in range(25):
                weights = [F(rng.randint(0, 10)) for _ in verts]
                total = sum(weights) or F(1)
                points.append(
                    tuple(
                        sum(w * v[j] for w, v in zip(weights, verts)) / total
                        for j in range(lp.n)
                    )
                )
            for x in points:
                assert lp.is_feasible(x)
                full = lp.full_solution(x)
                values = dict(enumerate(full))
                for it in trace.phase2:
                    d = it.dictionary
                    for bvar, const, row in zip(d.basic, d.constants, d.coeffs):
                        rhs = const + sum(
                            a * values[v] for a, v in zip(row, d.nonbasic)
                        )
                        assert values[bvar] == rhs, name
                    assert d.objective_at(values) == lp.objective_value(x), name

    def test_recorded_solutions_are_feasible_for_their_system(self):
        for name, _entry, trace in solved_examples():
            lp = trace.lp
            for it in trace.phase2:
                x = it.basic_solution[: lp.n]
                assert lp.is_feasible(x), name
                assert lp.full_solution(x) == it.basic_solution, name
                assert lp.objective_value(x) == it.objective_value, name

    def test_random_programs_solve_cleanly(self):
        for A, b, c in seeded_suite(12):
            lp = lp_new(A, b, c)
            trace = simplex_solve(lp, PivotRule.BLAND)
            assert trace.status in (SolveStatus.OPTIMAL, SolveStatus.UNBOUNDED)
            if trace.status is SolveStatus.OPTIMAL:
                x = trace.optimal_solution
                assert lp.is_feasible(x)
                assert lp.objective_value(x) == trace.optimal_value
