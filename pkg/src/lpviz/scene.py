"""Scene documents: canonical JSON interchange and offline HTML export.

A scene is everything a renderer needs to draw one solve: the program, the
region geometry, per-iteration dictionaries/tableaus, the vertex path,
objective level sets, and (for branch-and-bound nodes) tree metadata. Every
number appears twice — as a reduced exact string ("p/q", bare "p" for
integers) for display and as a shortest-round-trip float for drawing — so the
renderer never has to do arithmetic.

Serialization is canonical: fixed key order, compact separators, UTF-8.
Serializing the same document twice is byte-identical, and
``parse_scene(serialize_scene(doc))`` reproduces ``doc`` exactly.
"""

from __future__ import annotations

import importlib.resources
import json
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .bnb import BnbTrace
from .errors import (
    BundleMissing,
    DimensionUnsupported,
    LpvizError,
    SchemaError,
)
from .geometry import (
    LevelSet,
    Polytope,
    objective_levels,
    point_profile,
    polytope_of,
    trace_path,
)
from .model import LinearProgram, rat
from .simplex import (
    Dictionary,
    Iteration,
    SimplexTrace,
    Tableau,
    format_dictionary,
    format_tableau,
)

SCENE_VERSION = "1"
TOP_KEYS = (
    "version",
    "kind",
    "lp",
    "polytope",
    "constraints",
    "iterations",
    "path",
    "levels",
    "bnb",
    "options",
)
ENV_BUNDLE = "LPVIZ_UI_BUNDLE"

_FORMS = ("dictionary", "tableau")
_TOL = Fraction(1, 10**12)


@dataclass(frozen=True)
class SceneOptions:
    """Rendering options baked into a document.

    ``clip_box`` is an optional ``(lows, highs)`` pair of per-variable bounds
    used to cut displayable facets out of an unbounded region; the synthetic
    facets are flagged as such and the region still reports bounded=false.
    """

    form: str = "dictionary"
    basic_sol: bool = True
    show_basis: bool = True
    objective_ticks: int = 10
    clip_box: Optional[tuple[tuple[Fraction, ...], tuple[Fraction, ...]]] = None

    def __post_init__(self):
        if self.form not in _FORMS:
            raise ValueError(f"form must be one of {_FORMS}, got {self.form!r}")
        if self.objective_ticks < 2:
            raise ValueError("objective_ticks must be at least 2")
        if self.clip_box is not None:
            lows, highs = self.clip_box
            lows = tuple(rat(x) for x in lows)
            highs = tuple(rat(x) for x in highs)
            if len(lows) != len(highs):
                raise ValueError("clip_box lows and highs must have equal length")
            if any(lo < 0 for lo in lows):
                raise ValueError("clip_box lows must be nonnegative")
            if any(hi <= lo for lo, hi in zip(lows, highs)):
                raise ValueError("clip_box highs must exceed lows")
            object.__setattr__(self, "clip_box", (lows, highs))


@dataclass(frozen=True)
class SceneDocument:
    """A fully assembled scene; fields are plain JSON-ready values."""

    version: str
    kind: str
    lp: dict
    polytope: dict
    constraints: list
    iterations: list
    path: list
    levels: Optional[list]
    bnb: Optional[dict]
    options: dict

    def to_obj(self) -> dict:
        return {key: getattr(self, key) for key in TOP_KEYS}


def _rs(x: Fraction) -> str:
    return str(x)


def _fl(x: Fraction) -> float:
    return float(x)


def _display_id(lp: LinearProgram, var: int) -> int:
    """Display index: x1..x(n+m) are 1-based; the artificial variable is 0."""
    return var + 1 if var < lp.n + lp.m else 0


def _display_names(lp: LinearProgram) -> list[str]:
    return list(lp.variable_names) + ["x0"]


def _linear_label(coeffs: Sequence[Fraction], names: Sequence[str], sense: str, rhs: Fraction) -> str:
    parts: list[str] = []
    for coeff, name in zip(coeffs, names):
        if coeff == 0:
            continue
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        body = name if mag == 1 else f"{mag}{name}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    lhs = " ".join(parts) if parts else "0"
    symbol = "≤" if sense == "<=" else "≥"
    return f"{lhs} {symbol} {rhs}"


def _lp_payload(lp: LinearProgram) -> dict:
    return {
        "n": lp.n,
        "m": lp.m,
        "variables": list(lp.variable_names),
        "A": [[_rs(a) for a in row] for row in lp.A],
        "A_float": [[_fl(a) for a in row] for row in lp.A],
        "b": [_rs(x) for x in lp.b],
        "b_float": [_fl(x) for x in lp.b],
        "c": [_rs(x) for x in lp.c],
        "c_float": [_fl(x) for x in lp.c],
    }


def _constraints_payload(lp: LinearProgram) -> list:
    names = lp.variable_names
    entries = []
    for i in range(lp.m):
        entries.append(
            {
                "id": i,
                "kind": "row",
                "sense": "<=",
                "coeffs": [_rs(a) for a in lp.A[i]],
                "coeffs_float": [_fl(a) for a in lp.A[i]],
                "rhs": _rs(lp.b[i]),
                "rhs_float": _fl(lp.b[i]),
                "label": _linear_label(lp.A[i], names, "<=", lp.b[i]),
            }
        )
    zero = Fraction(0)
    for j in range(lp.n):
        unit = tuple(Fraction(1) if k == j else zero for k in range(lp.n))
        entries.append(
            {
                "id": lp.m + j,
                "kind": "bound",
                "sense": ">=",
                "coeffs": [_rs(a) for a in unit],
                "coeffs_float": [_fl(a) for a in unit],
                "rhs": _rs(zero),
                "rhs_float": 0.0,
                "label": f"{names[j]} ≥ 0",
            }
        )
    return entries


def _vertex_payload(
    lp: LinearProgram,
    vid: int,
    coords: tuple[Fraction, ...],
    tight: frozenset[int],
    bases: Sequence[frozenset[int]],
    options: SceneOptions,
) -> dict:
    full = lp.full_solution(coords)
    objective = lp.objective_value(coords)
    count = lp.n + lp.m if options.basic_sol else lp.n
    hover = {
        "labels": list(lp.variable_names[:count]),
        "values": [_rs(x) for x in full[:count]],
        "objective": _rs(objective),
        "bases": [sorted(_display_id(lp, v) for v in basis) for basis in bases]
        if options.show_basis
        else None,
    }
    return {
        "id": vid,
        "coords": [_fl(x) for x in coords],
        "coords_exact": [_rs(x) for x in coords],
        "solution": [_rs(x) for x in full],
        "objective": _rs(objective),
        "objective_float": _fl(objective),
        "tight": sorted(tight),
        "bases": [sorted(_display_id(lp, v) for v in basis) for basis in bases],
        "hover": hover,
    }


def _dictionary_payload(lp: LinearProgram, d: Dictionary) -> dict:
    names = _display_names(lp)
    return {
        "basic": [_display_id(lp, v) for v in d.basic],
        "nonbasic": [_display_id(lp, v) for v in d.nonbasic],
        "objective": {
            "constant": _rs(d.objective_constant),
            "coeffs": [_rs(x) for x in d.objective_coeffs],
        },
        "rows": [
            {
                "var": _display_id(lp, bvar),
                "constant": _rs(const),
                "coeffs": [_rs(x) for x in row],
            }
            for bvar, const, row in zip(d.basic, d.constants, d.coeffs)
        ],
        "text": format_dictionary(d, names),
    }


def _tableau_payload(lp: LinearProgram, t: Tableau) -> dict:
    names = _display_names(lp)
    return {
        "columns": [_display_id(lp, v) for v in t.columns],
        "basic": [_display_id(lp, v) for v in t.basic],
        "objective_row": [_rs(x) for x in t.objective_row],
        "rows": [[_rs(x) for x in row] for row in t.rows],
        "text": format_tableau(t, names),
    }


def _iteration_payload(
    lp: LinearProgram,
    it: Iteration,
    index: int,
    phase: int,
    vertex_id: Optional[int],
) -> dict:
    return {
        "index": index,
        "phase": phase,
        "entering": None if it.entering is None else _display_id(lp, it.entering),
        "leaving": None if it.leaving is None else _display_id(lp, it.leaving),
        "degenerate": it.degenerate_step,
        "objective_value": _rs(it.objective_value),
        "objective_value_float": _fl(it.objective_value),
        "basic_solution": [_rs(x) for x in it.basic_solution],
        "vertex": vertex_id,
        "dictionary": _dictionary_payload(lp, it.dictionary),
        "tableau": _tableau_payload(lp, it.tableau),
    }


def _iterations_payload(
    lp: LinearProgram, trace: SimplexTrace, coords_to_id: dict
) -> list:
    payloads = []
    index = 0
    for phase, iterations in ((1, trace.phase1 or ()), (2, trace.phase2)):
        for it in iterations:
            vertex_id = coords_to_id.get(it.basic_solution[: lp.n])
            payloads.append(_iteration_payload(lp, it, index, phase, vertex_id))
            index += 1
    return payloads


def _levels_payload(levels: Sequence[LevelSet]) -> list:
    return [
        {
            "value": _rs(ls.value),
            "value_float": _fl(ls.value),
            "points": [[_fl(x) for x in p] for p in ls.points],
            "points_exact": [[_rs(x) for x in p] for p in ls.points],
        }
        for ls in levels
    ]


def _polytope_payload(
    lp: LinearProgram, polytope: Polytope, options: SceneOptions
) -> tuple[dict, dict]:
    """Payload plus the coords -> vertex id map used for path mapping."""
    vertices = [
        _vertex_payload(lp, v.id, v.coords, v.tight, v.bases, options)
        for v in polytope.vertices
    ]
    payload = {
        "bounded": polytope.bounded,
        "empty": False,
        "clipped": False,
        "vertices": vertices,
        "edges": [list(e) for e in polytope.edges],
        "facets": [
            {
                "constraint": f.constraint,
                "synthetic": f.synthetic,
                "vertices": list(f.vertices),
            }
            for f in polytope.facets
        ],
    }
    coords_to_id = {v.coords: v.id for v in polytope.vertices}
    return payload, coords_to_id


def _clipped_polytope_payload(
    lp: LinearProgram, options: SceneOptions
) -> tuple[dict, dict]:
    """Geometry of the region cut to the clip box, attributed to the
    original constraints; box-made facets are flagged synthetic."""
    lows, highs = options.clip_box
    if len(lows) != lp.n:
        raise LpvizError(f"clip_box has {len(lows)} entries, expected {lp.n}")
    extra: list[tuple[tuple[Fraction, ...], Fraction]] = []
    for j, hi in enumerate(highs):
        normal = tuple(Fraction(1) if k == j else Fraction(0) for k in range(lp.n))
        extra.append((normal, hi))
    for j, lo in enumerate(lows):
        if lo > 0:
            normal = tuple(Fraction(-1) if k == j else Fraction(0) for k in range(lp.n))
            extra.append((normal, -lo))
    clipped = lp.with_rows(extra)
    cpoly = polytope_of(clipped)

    def map_cid(cid: int) -> Optional[int]:
        if cid < lp.m:
            return cid  # original row
        if cid < clipped.m:
            return None  # synthetic box row
        return lp.m + (cid - clipped.m)  # nonnegativity bound

    vertices = []
    coords_to_id = {}
    for v in cpoly.vertices:
        tight, bases = point_profile(lp, v.coords)
        vertices.append(_vertex_payload(lp, v.id, v.coords, tight, bases, options))
        coords_to_id[v.coords] = v.id
    facets = []
    for f in cpoly.facets:
        mapped = map_cid(f.constraint)
        facets.append(
            {
                "constraint": mapped,
                "synthetic": mapped is None,
                "vertices": list(f.vertices),
            }
        )
    payload = {
        "bounded": False,
        "empty": False,
        "clipped": True,
        "vertices": vertices,
        "edges": [list(e) for e in cpoly.edges],
        "facets": facets,
    }
    return payload, coords_to_id


_EMPTY_POLYTOPE = {
    "bounded": False,
    "empty": True,
    "clipped": False,
    "vertices": [],
    "edges": [],
    "facets": [],
}


def _options_payload(options: SceneOptions) -> dict:
    clip = None
    if options.clip_box is not None:
        lows, highs = options.clip_box
        clip = [[_rs(x) for x in lows], [_rs(x) for x in highs]]
    return {
        "form": options.form,
        "basic_sol": options.basic_sol,
        "show_basis": options.show_basis,
        "objective_ticks": options.objective_ticks,
        "clip_box": clip,
    }


def _document(
    kind: str,
    lp: LinearProgram,
    trace: SimplexTrace,
    options: SceneOptions,
    polytope: Optional[Polytope],
    bnb_payload: Optional[dict],
) -> SceneDocument:
    if polytope is None:
        poly_payload, coords_to_id = dict(_EMPTY_POLYTOPE), {}
        path: list[int] = []
        levels = None
    else:
        if not polytope.bounded and options.clip_box is not None:
            poly_payload, coords_to_id = _clipped_polytope_payload(lp, options)
            # Clipping may cut away visited vertices; keep the ones that remain.
            path = [
                coords_to_id[c]
                for c in (it.basic_solution[: lp.n] for it in trace.phase2)
                if c in coords_to_id
            ]
        else:
            poly_payload, coords_to_id = _polytope_payload(lp, polytope, options)
            path = trace_path(trace, polytope)
        levels = (
            _levels_payload(objective_levels(lp, polytope, options.objective_ticks))
            if polytope.bounded
            else None
        )
    return SceneDocument(
        version=SCENE_VERSION,
        kind=kind,
        lp=_lp_payload(lp),
        polytope=poly_payload,
        constraints=_constraints_payload(lp),
        iterations=_iterations_payload(lp, trace, coords_to_id),
        path=path,
        levels=levels,
        bnb=bnb_payload,
        options=_options_payload(options),
    )


def build_scene(
    lp: LinearProgram, trace: SimplexTrace, options: Optional[SceneOptions] = None
) -> SceneDocument:
    """Assemble the scene for one simplex solve.

    Supports n in {2, 3} (raises :class:`DimensionUnsupported` otherwise)
    and propagates :class:`EmptyRegion` for infeasible programs. Unbounded
    regions keep their vertex/edge skeleton, drop facets (unless a clip box
    synthesizes them), and omit level sets.
    """
    if lp.n not in (2, 3):
        raise DimensionUnsupported(
            f"scenes support 2 or 3 decision variables, got {lp.n}"
        )
    options = options or SceneOptions()
    polytope = polytope_of(lp)
    return _document("simplex", lp, trace, options, polytope, None)


def _bound_payload(lp: LinearProgram, bound) -> dict:
    return {
        "var": bound.var + 1,
        "sense": bound.sense,
        "value": _rs(bound.value),
        "label": bound.label(lp.variable_names[bound.var]),
    }


def build_bnb_scenes(
    bnb_trace: BnbTrace, options: Optional[SceneOptions] = None
) -> list[SceneDocument]:
    """One scene document per explored node, in exploration order.

    Each document shows the node's own (shrunken) region and relaxation
    trace, its accumulated bounds, the branch pair of its parent, the whole
    tree for navigation, and the incumbent as of that node. Infeasible nodes
    keep their phase-one certificate trace and an empty region.
    """
    options = options or SceneOptions()
    base = bnb_trace.lp
    if base.n not in (2, 3):
        raise DimensionUnsupported(
            f"scenes support 2 or 3 decision variables, got {base.n}"
        )
    tree = [
        {
            "id": node.id,
            "parent": node.parent,
            "status": node.status.value,
            "value": None
            if node.relaxation_value is None
            else _rs(node.relaxation_value),
        }
        for node in bnb_trace.nodes
    ]
    docs = []
    for node in bnb_trace.nodes:
        incumbent = None
        for record in bnb_trace.incumbent_history:
            if record.node <= node.id:
                incumbent = record
        parent_branch = None
        if node.parent is not None:
            parent_pair = bnb_trace.nodes[node.parent].branch_pair
            if parent_pair is not None:
                parent_branch = [_bound_payload(base, b) for b in parent_pair]
        payload = {
            "node": node.id,
            "parent": node.parent,
            "status": node.status.value,
            "node_count": len(bnb_trace.nodes),
            "added_bounds": [_bound_payload(base, b) for b in node.added_bounds],
            "parent_branch": parent_branch,
            "branch_pair": None
            if node.branch_pair is None
            else [_bound_payload(base, b) for b in node.branch_pair],
            "incumbent": None
            if incumbent is None
            else {
                "node": incumbent.node,
                "solution": [_rs(x) for x in incumbent.solution],
                "value": _rs(incumbent.value),
                "value_float": _fl(incumbent.value),
            },
            "tree": tree,
        }
        docs.append(
            _document("bnb_node", node.lp, node.trace, options, node.polytope, payload)
        )
    return docs


def serialize_scene(doc: SceneDocument) -> bytes:
    """Canonical bytes: fixed key order, compact separators, UTF-8."""
    return json.dumps(
        doc.to_obj(), ensure_ascii=False, separators=(",", ":"), allow_nan=False
    ).encode("utf-8")


def serialize_trace(lp: LinearProgram, trace: SimplexTrace) -> bytes:
    """Canonical JSON for a solve alone — works in any dimension (no
    geometry), so it covers programs a scene cannot."""
    solution = trace.optimal_solution
    payload = {
        "status": trace.status.value,
        "optimal_value": None if trace.optimal_value is None else _rs(trace.optimal_value),
        "optimal_solution": None if solution is None else [_rs(x) for x in solution],
        "iterations": _iterations_payload(lp, trace, {}),
    }
    return json.dumps(
        payload, ensure_ascii=False, separators=(",", ":"), allow_nan=False
    ).encode("utf-8")


def parse_scene(data: bytes | str) -> SceneDocument:
    """Parse and validate a scene document.

    Raises :class:`SchemaError` with a JSON-path location on any problem,
    including non-canonical rational strings such as "4/6" or "8/1".
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SchemaError(f"not valid UTF-8: {exc}", "$") from None
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}", "$") from None
    _validate_scene(obj)
    return SceneDocument(**{key: obj[key] for key in TOP_KEYS})


# --------------------------------------------------------------------------
# Validation


def _fail(path: str, message: str):
    raise SchemaError(message, path)


def _want(obj: dict, key: str, types, path: str, nullable: bool = False):
    if key not in obj:
        _fail(f"{path}.{key}", "missing required key")
    value = obj[key]
    if value is None and nullable:
        return None
    if isinstance(value, bool) and bool not in (
        types if isinstance(types, tuple) else (types,)
    ):
        _fail(f"{path}.{key}", "expected a number, got a boolean")
    if not isinstance(value, types):
        _fail(f"{path}.{key}", f"expected {types}, got {type(value).__name__}")
    return value


def _check_rational(value, path: str) -> Fraction:
    if not isinstance(value, str):
        _fail(path, f"expected an exact rational string, got {type(value).__name__}")
    try:
        f = Fraction(value)
    except (ValueError, ZeroDivisionError):
        _fail(path, f"not a rational number: {value!r}")
    if str(f) != value:
        _fail(path, f"rational string {value!r} is not in canonical form ({f})")
    return f


def _check_float(value, exact: Fraction, path: str) -> None:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        _fail(path, f"expected a float, got {type(value).__name__}")
    diff = abs(Fraction(value) - exact)
    tol = _TOL * max(Fraction(1), abs(exact))
    if diff > tol:
        _fail(path, f"float {value!r} disagrees with exact value {exact}")


def _check_rational_list(values, count, path: str) -> list[Fraction]:
    if not isinstance(values, list):
        _fail(path, "expected a list")
    if count is not None and len(values) != count:
        _fail(path, f"expected {count} entries, got {len(values)}")
    return [_check_rational(v, f"{path}[{i}]") for i, v in enumerate(values)]


def _check_int(value, path: str, lo=None, hi=None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        _fail(path, f"expected an integer, got {type(value).__name__}")
    if lo is not None and value < lo:
        _fail(path, f"expected >= {lo}, got {value}")
    if hi is not None and value >= hi:
        _fail(path, f"expected < {hi}, got {value}")
    return value


def _validate_scene(obj) -> None:
    if not isinstance(obj, dict):
        _fail("$", f"scene must be an object, got {type(obj).__name__}")
    for key in TOP_KEYS:
        if key not in obj:
            _fail(f"$.{key}", "missing required key")
    for key in obj:
        if key not in TOP_KEYS:
            _fail(f"$.{key}", "unexpected key")

    version = obj["version"]
    if not isinstance(version, str):
        _fail("$.version", "must be a string")
    major = version.split(".", 1)[0]
    if not major.isdigit():
        _fail("$.version", f"malformed version {version!r}")
    if int(major) != 1:
        _fail("$.version", f"unsupported major version {version!r}")

    kind = obj["kind"]
    if kind not in ("simplex", "bnb_node"):
        _fail("$.kind", f"unknown kind {kind!r}")

    options = _validate_options(obj["options"])
    n, m = _validate_lp(obj["lp"])
    _validate_constraints(obj["constraints"], n, m)
    vertex_count = _validate_polytope(obj["polytope"], n, m, options)
    _validate_iterations(obj["iterations"], n, m, vertex_count)
    path = obj["path"]
    if not isinstance(path, list):
        _fail("$.path", "expected a list")
    for i, vid in enumerate(path):
        _check_int(vid, f"$.path[{i}]", 0, vertex_count)
    _validate_levels(obj["levels"], n)
    _validate_bnb(obj["bnb"], kind, n)


def _validate_options(options) -> dict:
    path = "$.options"
    if not isinstance(options, dict):
        _fail(path, "expected an object")
    form = _want(options, "form", str, path)
    if form not in _FORMS:
        _fail(f"{path}.form", f"expected one of {_FORMS}, got {form!r}")
    _want(options, "basic_sol", bool, path)
    _want(options, "show_basis", bool, path)
    ticks = _want(options, "objective_ticks", int, path)
    if isinstance(ticks, bool) or ticks < 2:
        _fail(f"{path}.objective_ticks", "must be an integer >= 2")
    clip = _want(options, "clip_box", list, path, nullable=True)
    if clip is not None:
        if len(clip) != 2:
            _fail(f"{path}.clip_box", "expected [lows, highs]")
        lows = _check_rational_list(clip[0], None, f"{path}.clip_box[0]")
        _check_rational_list(clip[1], len(lows), f"{path}.clip_box[1]")
    return options


def _validate_lp(lp) -> tuple[int, int]:
    path = "$.lp"
    if not isinstance(lp, dict):
        _fail(path, "expected an object")
    n = _check_int(_want(lp, "n", int, path), f"{path}.n", 1)
    m = _check_int(_want(lp, "m", int, path), f"{path}.m", 0)
    variables = _want(lp, "variables", list, path)
    if len(variables) != n + m or not all(isinstance(v, str) for v in variables):
        _fail(f"{path}.variables", f"expected {n + m} variable names")
    A = _want(lp, "A", list, path)
    A_float = _want(lp, "A_float", list, path)
    if len(A) != m or len(A_float) != m:
        _fail(f"{path}.A", f"expected {m} rows")
    for i in range(m):
        row = _check_rational_list(A[i], n, f"{path}.A[{i}]")
        if not isinstance(A_float[i], list) or len(A_float[i]) != n:
            _fail(f"{path}.A_float[{i}]", f"expected {n} entries")
        for j in range(n):
            _check_float(A_float[i][j], row[j], f"{path}.A_float[{i}][{j}]")
    for key in ("b", "c"):
        count = m if key == "b" else n
        exact = _check_rational_list(_want(lp, key, list, path), count, f"{path}.{key}")
        floats = _want(lp, f"{key}_float", list, path)
        if len(floats) != count:
            _fail(f"{path}.{key}_float", f"expected {count} entries")
        for i in range(count):
            _check_float(floats[i], exact[i], f"{path}.{key}_float[{i}]")
    return n, m


def _validate_constraints(constraints, n: int, m: int) -> None:
    path = "$.constraints"
    if not isinstance(constraints, list):
        _fail(path, "expected a list")
    if len(constraints) != m + n:
        _fail(path, f"expected {m + n} entries (rows plus bounds), got {len(constraints)}")
    for i, entry in enumerate(constraints):
        epath = f"{path}[{i}]"
        if not isinstance(entry, dict):
            _fail(epath, "expected an object")
        if _check_int(_want(entry, "id", int, epath), f"{epath}.id") != i:
            _fail(f"{epath}.id", f"expected {i}")
        kind = _want(entry, "kind", str, epath)
        expected_kind = "row" if i < m else "bound"
        if kind != expected_kind:
            _fail(f"{epath}.kind", f"expected {expected_kind!r}, got {kind!r}")
        sense = _want(entry, "sense", str, epath)
        if sense not in ("<=", ">="):
            _fail(f"{epath}.sense", f"expected '<=' or '>=', got {sense!r}")
        coeffs = _check_rational_list(_want(entry, "coeffs", list, epath), n, f"{epath}.coeffs")
        floats = _want(entry, "coeffs_float", list, epath)
        if len(floats) != n:
            _fail(f"{epath}.coeffs_float", f"expected {n} entries")
        for j in range(n):
            _check_float(floats[j], coeffs[j], f"{epath}.coeffs_float[{j}]")
        rhs = _check_rational(_want(entry, "rhs", (str,), epath), f"{epath}.rhs")
        _check_float(_want(entry, "rhs_float", (int, float), epath), rhs, f"{epath}.rhs_float")
        _want(entry, "label", str, epath)


def _validate_polytope(polytope, n: int, m: int, options: dict) -> int:
    path = "$.polytope"
    if not isinstance(polytope, dict):
        _fail(path, "expected an object")
    for key in ("bounded", "empty", "clipped"):
        _want(polytope, key, bool, path)
    vertices = _want(polytope, "vertices", list, path)
    hover_count = n + m if options["basic_sol"] else n
    for i, v in enumerate(vertices):
        vpath = f"{path}.vertices[{i}]"
        if not isinstance(v, dict):
            _fail(vpath, "expected an object")
        if _check_int(_want(v, "id", int, vpath), f"{vpath}.id") != i:
            _fail(f"{vpath}.id", f"expected {i} (ids follow list order)")
        coords = _check_rational_list(
            _want(v, "coords_exact", list, vpath), n, f"{vpath}.coords_exact"
        )
        floats = _want(v, "coords", list, vpath)
        if len(floats) != n:
            _fail(f"{vpath}.coords", f"expected {n} entries")
        for j in range(n):
            _check_float(floats[j], coords[j], f"{vpath}.coords[{j}]")
        _check_rational_list(_want(v, "solution", list, vpath), n + m, f"{vpath}.solution")
        objective = _check_rational(_want(v, "objective", (str,), vpath), f"{vpath}.objective")
        _check_float(
            _want(v, "objective_float", (int, float), vpath),
            objective,
            f"{vpath}.objective_float",
        )
        tight = _want(v, "tight", list, vpath)
        for k, cid in enumerate(tight):
            _check_int(cid, f"{vpath}.tight[{k}]", 0, m + n)
        bases = _want(v, "bases", list, vpath)
        for k, basis in enumerate(bases):
            if not isinstance(basis, list):
                _fail(f"{vpath}.bases[{k}]", "expected a list of variable ids")
            for t, var in enumerate(basis):
                _check_int(var, f"{vpath}.bases[{k}][{t}]", 0, n + m + 1)
        hover = _want(v, "hover", dict, vpath)
        hpath = f"{vpath}.hover"
        labels = _want(hover, "labels", list, hpath)
        values = _want(hover, "values", list, hpath)
        if len(labels) != hover_count:
            _fail(f"{hpath}.labels", f"expected {hover_count} entries, got {len(labels)}")
        if len(values) != hover_count:
            _fail(f"{hpath}.values", f"expected {hover_count} entries, got {len(values)}")
        _check_rational_list(values, hover_count, f"{hpath}.values")
        _check_rational(_want(hover, "objective", (str,), hpath), f"{hpath}.objective")
        hbases = _want(hover, "bases", list, hpath, nullable=True)
        if hbases is not None and not options["show_basis"]:
            _fail(f"{hpath}.bases", "must be null when show_basis is false")
        if hbases is None and options["show_basis"]:
            _fail(f"{hpath}.bases", "must be present when show_basis is true")
    count = len(vertices)
    edges = _want(polytope, "edges", list, path)
    for i, e in enumerate(edges):
        epath = f"{path}.edges[{i}]"
        if not isinstance(e, list) or len(e) != 2:
            _fail(epath, "expected a [u, v] pair")
        u = _check_int(e[0], f"{epath}[0]", 0, count)
        v = _check_int(e[1], f"{epath}[1]", 0, count)
        if u == v:
            _fail(epath, "edge endpoints must differ")
    facets = _want(polytope, "facets", list, path)
    for i, f in enumerate(facets):
        fpath = f"{path}.facets[{i}]"
        if not isinstance(f, dict):
            _fail(fpath, "expected an object")
        cid = _want(f, "constraint", int, fpath, nullable=True)
        if cid is not None:
            _check_int(cid, f"{fpath}.constraint", 0, m + n)
        _want(f, "synthetic", bool, fpath)
        ring = _want(f, "vertices", list, fpath)
        if len(ring) < 3:
            _fail(f"{fpath}.vertices", "a facet needs at least 3 vertices")
        for k, vid in enumerate(ring):
            _check_int(vid, f"{fpath}.vertices[{k}]", 0, count)
    return count


def _validate_dictionary(d, n: int, m: int, path: str) -> None:
    if not isinstance(d, dict):
        _fail(path, "expected an object")
    basic = _want(d, "basic", list, path)
    nonbasic = _want(d, "nonbasic", list, path)
    for name, ids in (("basic", basic), ("nonbasic", nonbasic)):
        for k, var in enumerate(ids):
            _check_int(var, f"{path}.{name}[{k}]", 0, n + m + 1)
    objective = _want(d, "objective", dict, path)
    _check_rational(_want(objective, "constant", (str,), f"{path}.objective"), f"{path}.objective.constant")
    _check_rational_list(
        _want(objective, "coeffs", list, f"{path}.objective"),
        len(nonbasic),
        f"{path}.objective.coeffs",
    )
    rows = _want(d, "rows", list, path)
    if len(rows) != len(basic):
        _fail(f"{path}.rows", f"expected {len(basic)} rows")
    for i, row in enumerate(rows):
        rpath = f"{path}.rows[{i}]"
        if not isinstance(row, dict):
            _fail(rpath, "expected an object")
        _check_int(_want(row, "var", int, rpath), f"{rpath}.var", 0, n + m + 1)
        _check_rational(_want(row, "constant", (str,), rpath), f"{rpath}.constant")
        _check_rational_list(
            _want(row, "coeffs", list, rpath), len(nonbasic), f"{rpath}.coeffs"
        )
    text = _want(d, "text", list, path)
    if not all(isinstance(line, str) for line in text):
        _fail(f"{path}.text", "expected a list of strings")


def _validate_tableau(t, n: int, m: int, path: str) -> None:
    if not isinstance(t, dict):
        _fail(path, "expected an object")
    columns = _want(t, "columns", list, path)
    for k, var in enumerate(columns):
        _check_int(var, f"{path}.columns[{k}]", 0, n + m + 1)
    basic = _want(t, "basic", list, path)
    for k, var in enumerate(basic):
        _check_int(var, f"{path}.basic[{k}]", 0, n + m + 1)
    width = len(columns) + 1
    _check_rational_list(
        _want(t, "objective_row", list, path), width, f"{path}.objective_row"
    )
    rows = _want(t, "rows", list, path)
    if len(rows) != len(basic):
        _fail(f"{path}.rows", f"expected {len(basic)} rows")
    for i, row in enumerate(rows):
        _check_rational_list(row, width, f"{path}.rows[{i}]")
    text = _want(t, "text", list, path)
    if not all(isinstance(line, str) for line in text):
        _fail(f"{path}.text", "expected a list of strings")


def _validate_iterations(iterations, n: int, m: int, vertex_count: int) -> None:
    path = "$.iterations"
    if not isinstance(iterations, list):
        _fail(path, "expected a list")
    if not iterations:
        _fail(path, "a scene needs at least one iteration")
    for i, it in enumerate(iterations):
        ipath = f"{path}[{i}]"
        if not isinstance(it, dict):
            _fail(ipath, "expected an object")
        if _check_int(_want(it, "index", int, ipath), f"{ipath}.index") != i:
            _fail(f"{ipath}.index", f"expected {i}")
        phase = _want(it, "phase", int, ipath)
        if phase not in (1, 2):
            _fail(f"{ipath}.phase", f"expected 1 or 2, got {phase}")
        for key in ("entering", "leaving"):
            var = _want(it, key, int, ipath, nullable=True)
            if var is not None:
                _check_int(var, f"{ipath}.{key}", 0, n + m + 1)
        _want(it, "degenerate", bool, ipath)
        value = _check_rational(
            _want(it, "objective_value", (str,), ipath), f"{ipath}.objective_value"
        )
        _check_float(
            _want(it, "objective_value_float", (int, float), ipath),
            value,
            f"{ipath}.objective_value_float",
        )
        _check_rational_list(
            _want(it, "basic_solution", list, ipath), n + m, f"{ipath}.basic_solution"
        )
        vid = _want(it, "vertex", int, ipath, nullable=True)
        if vid is not None:
            _check_int(vid, f"{ipath}.vertex", 0, vertex_count)
        _validate_dictionary(it.get("dictionary"), n, m, f"{ipath}.dictionary")
        _validate_tableau(it.get("tableau"), n, m, f"{ipath}.tableau")


def _validate_levels(levels, n: int) -> None:
    if levels is None:
        return
    path = "$.levels"
    if not isinstance(levels, list):
        _fail(path, "expected a list or null")
    for i, level in enumerate(levels):
        lpath = f"{path}[{i}]"
        if not isinstance(level, dict):
            _fail(lpath, "expected an object")
        value = _check_rational(_want(level, "value", (str,), lpath), f"{lpath}.value")
        _check_float(
            _want(level, "value_float", (int, float), lpath), value, f"{lpath}.value_float"
        )
        points = _want(level, "points", list, lpath)
        exact = _want(level, "points_exact", list, lpath)
        if len(points) != len(exact):
            _fail(f"{lpath}.points", "points and points_exact lengths differ")
        for k in range(len(points)):
            ex = _check_rational_list(exact[k], n, f"{lpath}.points_exact[{k}]")
            if not isinstance(points[k], list) or len(points[k]) != n:
                _fail(f"{lpath}.points[{k}]", f"expected {n} coordinates")
            for j in range(n):
                _check_float(points[k][j], ex[j], f"{lpath}.points[{k}][{j}]")


_NODE_STATUSES = ("branched", "integral", "pruned_by_bound", "infeasible")


def _validate_bound(bound, n: int, path: str) -> None:
    if not isinstance(bound, dict):
        _fail(path, "expected an object")
    _check_int(_want(bound, "var", int, path), f"{path}.var", 1, n + 1)
    sense = _want(bound, "sense", str, path)
    if sense not in ("<=", ">="):
        _fail(f"{path}.sense", f"expected '<=' or '>=', got {sense!r}")
    value = _check_rational(_want(bound, "value", (str,), path), f"{path}.value")
    if value.denominator != 1:
        _fail(f"{path}.value", "branching bounds must be integral")
    _want(bound, "label", str, path)


def _validate_bnb(bnb, kind: str, n: int) -> None:
    path = "$.bnb"
    if kind == "simplex":
        if bnb is not None:
            _fail(path, "must be null for simplex scenes")
        return
    if not isinstance(bnb, dict):
        _fail(path, "expected an object for bnb_node scenes")
    count = _check_int(_want(bnb, "node_count", int, path), f"{path}.node_count", 1)
    node = _check_int(_want(bnb, "node", int, path), f"{path}.node", 0, count)
    parent = _want(bnb, "parent", int, path, nullable=True)
    if parent is not None:
        _check_int(parent, f"{path}.parent", 0, count)
    status = _want(bnb, "status", str, path)
    if status not in _NODE_STATUSES:
        _fail(f"{path}.status", f"unknown status {status!r}")
    for key in ("added_bounds",):
        bounds = _want(bnb, key, list, path)
        for i, bound in enumerate(bounds):
            _validate_bound(bound, n, f"{path}.{key}[{i}]")
    for key in ("parent_branch", "branch_pair"):
        pair = _want(bnb, key, list, path, nullable=True)
        if pair is not None:
            if len(pair) != 2:
                _fail(f"{path}.{key}", "expected exactly two bounds")
            for i, bound in enumerate(pair):
                _validate_bound(bound, n, f"{path}.{key}[{i}]")
    incumbent = _want(bnb, "incumbent", dict, path, nullable=True)
    if incumbent is not None:
        ipath = f"{path}.incumbent"
        _check_int(_want(incumbent, "node", int, ipath), f"{ipath}.node", 0, count)
        _check_rational_list(
            _want(incumbent, "solution", list, ipath), n, f"{ipath}.solution"
        )
        value = _check_rational(_want(incumbent, "value", (str,), ipath), f"{ipath}.value")
        _check_float(
            _want(incumbent, "value_float", (int, float), ipath),
            value,
            f"{ipath}.value_float",
        )
    tree = _want(bnb, "tree", list, path)
    if len(tree) != count:
        _fail(f"{path}.tree", f"expected {count} entries")
    seen_self = False
    for i, entry in enumerate(tree):
        tpath = f"{path}.tree[{i}]"
        if not isinstance(entry, dict):
            _fail(tpath, "expected an object")
        tid = _check_int(_want(entry, "id", int, tpath), f"{tpath}.id", 0, count)
        if tid != i:
            _fail(f"{tpath}.id", f"expected {i}")
        tparent = _want(entry, "parent", int, tpath, nullable=True)
        if tparent is not None:
            _check_int(tparent, f"{tpath}.parent", 0, count)
        tstatus = _want(entry, "status", str, tpath)
        if tstatus not in _NODE_STATUSES:
            _fail(f"{tpath}.status", f"unknown status {tstatus!r}")
        tvalue = _want(entry, "value", str, tpath, nullable=True)
        if tvalue is not None:
            _check_rational(tvalue, f"{tpath}.value")
        seen_self = seen_self or tid == node
    if not seen_self:
        _fail(f"{path}.node", "node id missing from tree")


# --------------------------------------------------------------------------
# HTML export


_HTML_TEMPLATE = """<!DOCTYPE html>
<html lang="en">
<head>
<meta charset="utf-8">
<meta name="viewport" content="width=device-width, initial-scale=1">
<title>{title}</title>
<style>
:root {{ color-scheme: light; }}
body {{ margin: 0; font: 14px/1.45 system-ui, sans-serif; background: #fafafa; color: #1a1a1a; }}
</style>
</head>
<body>
<div id="app"></div>
<script id="scene-data" type="application/json">{scene}</script>
<script>{bundle}</script>
</body>
</html>
"""


def default_ui_bundle() -> str:
    """The viewer script: the env override if set, else the vendored asset."""
    override = os.environ.get(ENV_BUNDLE)
    if override:
        if not os.path.isfile(override):
            raise BundleMissing(f"{ENV_BUNDLE} points to a missing file: {override}")
        with open(override, "r", encoding="utf-8") as fh:
            return fh.read()
    resource = importlib.resources.files("lpviz").joinpath("assets/viewer.js")
    try:
        return resource.read_text(encoding="utf-8")
    except (FileNotFoundError, OSError) as exc:
        raise BundleMissing("no vendored viewer bundle found") from exc


def write_html(doc: SceneDocument, ui_bundle: Optional[str | bytes] = None) -> str:
    """Render ``doc`` as one self-contained UTF-8 HTML page.

    The canonical scene JSON is embedded verbatim in the element with id
    ``scene-data``; the page references no external resources. An explicitly
    empty bundle raises :class:`BundleMissing`.
    """
    if ui_bundle is None:
        bundle = default_ui_bundle()
    else:
        if isinstance(ui_bundle, bytes):
            ui_bundle = ui_bundle.decode("utf-8")
        bundle = ui_bundle
    if not bundle.strip():
        raise BundleMissing("the UI bundle is empty")

    scene_json = serialize_scene(doc).decode("utf-8")
    for name, text in (("scene JSON", scene_json), ("UI bundle", bundle)):
        if "</script" in text.lower():
            raise LpvizError(f"the {name} contains '</script' and cannot be embedded")

    if doc.kind == "bnb_node":
        title = f"Branch & bound node {doc.bnb['node']}"
    else:
        title = "Simplex visualization"
    return _HTML_TEMPLATE.format(title=title, scene=scene_json, bundle=bundle)


def bnb_index_html(docs: Sequence[SceneDocument], filenames: Sequence[str]) -> str:
    """A plain navigation page linking every node document (relative links)."""
    rows = []
    for doc, filename in zip(docs, filenames):
        meta = doc.bnb
        value = next(
            (e["value"] for e in meta["tree"] if e["id"] == meta["node"]), None
        )
        bounds = ", ".join(b["label"] for b in meta["added_bounds"]) or "root"
        rows.append(
            f'<tr><td><a href="{filename}">node {meta["node"]}</a></td>'
            f"<td>{meta['status']}</td><td>{'' if value is None else value}</td>"
            f"<td>{bounds}</td></tr>"
        )
    table = "\n".join(rows)
    return f"""<!DOCTYPE html>
<html lang="en">
<head>
<meta charset="utf-8">
<title>Branch &amp; bound nodes</title>
<style>
body {{ font: 14px/1.5 system-ui, sans-serif; margin: 2rem; }}
table {{ border-collapse: collapse; }}
td, th {{ border: 1px solid #ccc; padding: 0.3rem 0.8rem; }}
</style>
</head>
<body>
<h1>Branch &amp; bound nodes</h1>
<table>
<tr><th>node</th><th>status</th><th>relaxation</th><th>bounds</th></tr>
{table}
</table>
</body>
</html>
"""
