"""Exact-arithmetic linear programming with step-by-step visual exports.

The package solves small maximization programs (Ax <= b, x >= 0) with the
dictionary-form simplex method over rational numbers, enumerates the feasible
region's exact geometry, runs branch and bound for integer programs, and
compiles everything into self-contained HTML visualizations for teaching.

Quick start::

    from lpviz import lp_new, simplex_solve, build_scene, write_html

    lp = lp_new(A=[[2, 2], [2, 1]], b=[8, 6], c=[16, 10])
    trace = simplex_solve(lp)
    html = write_html(build_scene(lp, trace))
"""

from .bnb import (
    BnbNode,
    BnbTrace,
    Bound,
    BranchRule,
    IncumbentRecord,
    NodeStatus,
    branch_and_bound,
    branch_bounds,
)
from .errors import (
    BundleMissing,
    DimensionMismatch,
    DimensionUnsupported,
    EmptyRegion,
    LpvizError,
    NodeLimitExceeded,
    NotFractional,
    PhaseOneRequired,
    SchemaError,
    SingularPivot,
    UnboundedRelaxation,
    UnknownExample,
    VertexNotFound,
)
from .examples import ExampleEntry, example, example_names, klee_minty
from .geometry import (
    Facet,
    LevelSet,
    Polytope,
    Vertex,
    enumerate_vertices,
    is_bounded,
    objective_levels,
    point_profile,
    polytope_of,
    trace_path,
)
from .model import (
    LinearProgram,
    Rational,
    load_lp,
    loads_lp,
    lp_from_obj,
    lp_new,
    rat,
    rat_str,
    to_equality_form,
)
from .scene import (
    SceneDocument,
    SceneOptions,
    bnb_index_html,
    build_bnb_scenes,
    build_scene,
    parse_scene,
    serialize_scene,
    serialize_trace,
    write_html,
)
from .simplex import (
    Dictionary,
    Iteration,
    PivotRule,
    SimplexTrace,
    SolveStatus,
    Tableau,
    choose_entering,
    choose_leaving,
    dictionary_to_tableau,
    format_dictionary,
    format_tableau,
    initial_dictionary,
    phase_one,
    pivot,
    simplex_solve,
    tableau_to_dictionary,
)

__version__ = "0.1.0"

__all__ = [
    "BnbNode",
    "BnbTrace",
    "Bound",
    "BranchRule",
    "BundleMissing",
    "Dictionary",
    "DimensionMismatch",
    "DimensionUnsupported",
    "EmptyRegion",
    "ExampleEntry",
    "Facet",
    "IncumbentRecord",
    "Iteration",
    "LevelSet",
    "LinearProgram",
    "LpvizError",
    "NodeLimitExceeded",
    "NodeStatus",
    "NotFractional",
    "PhaseOneRequired",
    "PivotRule",
    "Polytope",
    "Rational",
    "SceneDocument",
    "SceneOptions",
    "SchemaError",
    "SimplexTrace",
    "SingularPivot",
    "SolveStatus",
    "Tableau",
    "UnboundedRelaxation",
    "UnknownExample",
    "Vertex",
    "VertexNotFound",
    "bnb_index_html",
    "branch_and_bound",
    "branch_bounds",
    "build_bnb_scenes",
    "build_scene",
    "choose_entering",
    "choose_leaving",
    "dictionary_to_tableau",
    "enumerate_vertices",
    "example",
    "example_names",
    "format_dictionary",
    "format_tableau",
    "initial_dictionary",
    "is_bounded",
    "klee_minty",
    "load_lp",
    "loads_lp",
    "lp_from_obj",
    "lp_new",
    "objective_levels",
    "parse_scene",
    "phase_one",
    "pivot",
    "point_profile",
    "polytope_of",
    "rat",
    "rat_str",
    "serialize_scene",
    "serialize_trace",
    "simplex_solve",
    "tableau_to_dictionary",
    "to_equality_form",
    "trace_path",
    "write_html",
]
