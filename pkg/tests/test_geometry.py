from fractions import Fraction

import pytest

from lpviz.errors import DimensionUnsupported, EmptyRegion, VertexNotFound
from lpviz.examples import example
from lpviz.geometry import (
    constraint_rows,
    constraint_variable,
    enumerate_vertices,
    is_bounded,
    objective_levels,
    point_profile,
    polytope_of,
    trace_path,
)
from lpviz.model import lp_new
from lpviz.simplex import simplex_solve

from .oracles import oracle_vertices, seeded_suite

F = Fraction


def coords(poly):
    return [v.coords for v in poly.vertices]


class TestLegoRegionFrozen:
    def setup_method(self):
        self.lp = example("lego_2d").lp
        self.poly = polytope_of(self.lp)

    def test_vertices_in_lexicographic_order(self):
        assert coords(self.poly) == [(0, 0), (0, 4), (2, 2), (3, 0)]
        assert [v.id for v in self.poly.vertices] == [0, 1, 2, 3]

    def test_vertex_metadata(self):
        origin = self.poly.vertices[0]
        assert origin.full_solution == (0, 0, 8, 6)
        assert origin.objective == 0
        # Tight there: both nonnegativity bounds (ids 2 and 3 after the rows).
        assert origin.tight == frozenset({2, 3})
        assert origin.bases == (frozenset({2, 3}),)
        top = self.poly.vertices[2]
        assert top.tight == frozenset({0, 1})
        assert top.objective == 52

    def test_edges(self):
        assert set(self.poly.edges) == {(0, 1), (0, 3), (1, 2), (2, 3)}
        assert self.poly.bounded
        assert self.poly.facets == ()  # faces are only built in 3-D

    def test_walk_maps_onto_vertex_ids(self):
        trace = simplex_solve(self.lp)
        assert trace_path(trace, self.poly) == [0, 3, 2]

    def test_levels_evenly_spaced(self):
        levels = objective_levels(self.lp, self.poly, tick_count=3)
        assert [lv.value for lv in levels] == [0, 26, 52]
        mid = levels[1]
        assert set(mid.points) == {(0, F(13, 5)), (F(13, 8), 0)}
        top = levels[2]
        assert top.points == ((2, 2),)


class TestConstraintIds:
    def test_rows_then_bounds(self):
        lp = example("lego_2d").lp
        rows = constraint_rows(lp)
        assert rows[0] == ((2, 2), 8)
        assert rows[1] == ((2, 1), 6)
        assert rows[2] == ((-1, 0), 0)  # -x1 <= 0
        assert rows[3] == ((0, -1), 0)
        # Row constraints map to their slack, bound constraints to their
        # decision variable: that variable is zero exactly when cid binds.
        assert constraint_variable(lp, 0) == 2
        assert constraint_variable(lp, 1) == 3
        assert constraint_variable(lp, 2) == 0
        assert constraint_variable(lp, 3) == 1


class TestDegenerateVertex:
    def test_three_planes_one_corner(self):
        lp = lp_new([[1, 0], [0, 1], [1, 1]], [1, 1, 2], [1, 1])
        poly = polytope_of(lp)
        corner = next(v for v in poly.vertices if v.coords == (1, 1))
        assert corner.tight == frozenset({0, 1, 2})
        # All three slacks vanish there, so three variable bases (each keeps
        # both decision variables plus one of the zero slacks) describe it.
        assert len(corner.bases) == 3
        assert set(corner.bases) == {
            frozenset({0, 1, 2}),
            frozenset({0, 1, 3}),
            frozenset({0, 1, 4}),
        }

    def test_point_profile_on_non_vertex(self):
        lp = example("lego_2d").lp
        tight, bases = point_profile(lp, (F(1), F(1)))
        assert tight == frozenset()
        assert bases == ()
        edge_mid, edge_bases = point_profile(lp, (F(0), F(2)))
        assert edge_mid == frozenset({2})  # only -x1 <= 0 binds
        assert edge_bases == ()


class TestThreeDimensional:
    def test_squashed_cube_counts(self):
        poly = polytope_of(example("klee_minty_3d").lp)
        assert len(poly.vertices) == 8
        assert len(poly.edges) == 12
        assert len(poly.facets) == 6
        assert poly.bounded

    def test_squashed_cube_walk(self):
        entry = example("klee_minty_3d")
        poly = polytope_of(entry.lp)
        trace = simplex_solve(entry.lp)
        assert trace_path(trace, poly) == [0, 4, 6, 2, 3, 7, 5, 1]

    def test_dodecahedron_counts(self):
        poly = polytope_of(example("dodecahedron_3d").lp)
        assert len(poly.vertices) == 20
        assert len(poly.edges) == 30
        assert len(poly.facets) == 12
        assert all(len(f.vertices) == 5 for f in poly.facets)
        assert all(not f.synthetic for f in poly.facets)
        assert all(c > 0 for v in poly.vertices for c in v.coords)

    @pytest.mark.parametrize("name", ["klee_minty_3d", "dodecahedron_3d"])
    def test_facet_cycles_are_edge_paths_on_their_plane(self, name):
        lp = example(name).lp
        poly = polytope_of(lp)
        rows = constraint_rows(lp)
        edge_set = {frozenset(e) for e in poly.edges}
        for facet in poly.facets:
            cycle = facet.vertices
            assert len(cycle) >= 3
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                assert frozenset((a, b)) in edge_set
            normal, rhs = rows[facet.constraint]
            for vid in cycle:
                point = poly.vertices[vid].coords
                assert sum(nk * xk for nk, xk in zip(normal, point)) == rhs

    def test_every_edge_lies_on_two_facets(self):
        poly = polytope_of(example("dodecahedron_3d").lp)
        count = {frozenset(e): 0 for e in poly.edges}
        for facet in poly.facets:
            cycle = facet.vertices
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                count[frozenset((a, b))] += 1
        assert all(c == 2 for c in count.values())


class TestUnboundedRegions:
    def test_strip_skeleton(self):
        lp = example("unbounded_2d").lp
        assert not is_bounded(lp)
        poly = polytope_of(lp)
        assert not poly.bounded
        assert coords(poly) == [(0, 0), (0, 1), (1, 0)]
        assert set(poly.edges) == {(0, 1), (0, 2)}
        assert poly.facets == ()

    def test_levels_refuse_unbounded(self):
        lp = example("unbounded_2d").lp
        poly = polytope_of(lp)
        with pytest.raises(ValueError):
            objective_levels(lp, poly, tick_count=3)


class TestLevels:
    def test_flat_objective_collapses_to_one_level(self):
        lp = lp_new([[1, 1]], [4], [0, 0])
        poly = polytope_of(lp)
        levels = objective_levels(lp, poly, tick_count=5)
        assert len(levels) == 1
        assert levels[0].value == 0
        assert set(levels[0].points) == {v.coords for v in poly.vertices}

    def test_points_are_feasible_and_on_level(self):
        for name in ("lego_2d", "klee_minty_3d", "dodecahedron_3d"):
            lp = example(name).lp
            poly = polytope_of(lp)
            for level in objective_levels(lp, poly, tick_count=7):
                assert level.points, name
                for p in level.points:
                    assert lp.is_feasible(p), name
                    assert lp.objective_value(p) == level.value, name

    def test_even_spacing(self):
        lp = example("lego_2d").lp
        poly = polytope_of(lp)
        levels = objective_levels(lp, poly, tick_count=5)
        values = [lv.value for lv in levels]
        assert values == [0, 13, 26, 39, 52]
        diffs = {b - a for a, b in zip(values, values[1:])}
        assert len(diffs) == 1

    def test_tick_count_must_be_at_least_two(self):
        lp = example("lego_2d").lp
        poly = polytope_of(lp)
        with pytest.raises(ValueError):
            objective_levels(lp, poly, tick_count=1)


class TestPathMapping:
    def test_degenerate_walk_repeats_a_vertex(self):
        lp = example("degenerate_2d").lp
        poly = polytope_of(lp)
        trace = simplex_solve(lp)
        assert trace_path(trace, poly) == [0, 1, 1]

    def test_unknown_point_raises(self):
        lego = example("lego_2d")
        other = example("integrality_2d")
        trace = simplex_solve(other.lp)
        with pytest.raises(VertexNotFound):
            trace_path(trace, polytope_of(lego.lp))


class TestEdgeCasesAndErrors:
    def test_one_dimensional_segment(self):
        lp = lp_new([[2]], [4], [1])
        poly = polytope_of(lp)
        assert coords(poly) == [(0,), (2,)]
        assert poly.edges == ((0, 1),)
        assert poly.bounded

    def test_empty_region(self):
        lp = lp_new([[1, 1], [-1, -1]], [1, -3], [1, 1])
        with pytest.raises(EmptyRegion):
            polytope_of(lp)
        with pytest.raises(EmptyRegion):
            is_bounded(lp)

    def test_dimension_gate(self):
        lp = lp_new([[1, 1, 1, 1]], [4], [1, 1, 1, 1])
        with pytest.raises(DimensionUnsupported):
            polytope_of(lp)


class TestOracleAgreement:
    def test_catalog_vertices_match_brute_force(self):
        for name in (
            "lego_2d",
            "klee_minty_2d",
            "klee_minty_3d",
            "degenerate_2d",
            "multiple_optima_2d",
            "phase1_needed_2d",
            "integrality_2d",
            "dodecahedron_3d",
        ):
            lp = example(name).lp
            expected = oracle_vertices(lp.A, lp.b, lp.n)
            got = {v.coords for v in polytope_of(lp).vertices}
            assert got == expected, name

    def test_random_regions_match_brute_force(self):
        for A, b, c in seeded_suite(10):
            lp = lp_new(A, b, c)
            expected = oracle_vertices(lp.A, lp.b, lp.n)
            got = {v.coords for v in enumerate_vertices(lp)}
            assert got == expected

    def test_tight_sets_certify_vertices(self):
        for A, b, c in seeded_suite(6):
            lp = lp_new(A, b, c)
            rows = constraint_rows(lp)
            for v in enumerate_vertices(lp):
                assert len(v.bases) >= 1
                for cid in v.tight:
                    normal, rhs = rows[cid]
                    assert sum(nk * xk for nk, xk in zip(normal, v.coords)) == rhs
                for cid in range(len(rows)):
                    if cid not in v.tight:
                        normal, rhs = rows[cid]
                        lhs = sum(nk * xk for nk, xk in zip(normal, v.coords))
                        assert lhs < rhs
