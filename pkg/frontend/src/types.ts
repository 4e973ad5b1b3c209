/// Type declarations for version-1 scene documents.
///
/// A scene is the full JSON contract between the solver package and this
/// viewer: every number the UI displays is already in the document, as an
/// exact fraction string for algebra and a float twin for geometry. The
/// viewer never computes with LP data — it only projects float coordinates
/// to the screen.

/** An exact rational rendered as "p" or "p/q". */
export type Rational = string;

export type Sense = '<=' | '>=';
export type PaneForm = 'dictionary' | 'tableau';
export type SceneKind = 'simplex' | 'bnb_node';

export interface LpPayload {
    n: number;
    m: number;
    variables: string[];
    A: Rational[][];
    A_float: number[][];
    b: Rational[];
    b_float: number[];
    c: Rational[];
    c_float: number[];
}

export interface HoverPayload {
    labels: string[];
    /** Exact value strings, or null when the scene was built terse. */
    values: Rational[] | null;
    objective: Rational;
    /** Display-id bases, or null when basis display is off. */
    bases: number[][] | null;
}

export interface ScenePolytopeVertex {
    id: number;
    coords: number[];
    coords_exact: Rational[];
    solution: Rational[];
    objective: Rational;
    objective_float: number;
    tight: number[];
    bases: number[][];
    hover: HoverPayload;
}

export interface SceneFacet {
    /** Constraint id the facet lies on; null for synthetic clip faces. */
    constraint: number | null;
    synthetic: boolean;
    /** Vertex ids in cyclic boundary order. */
    vertices: number[];
}

export interface ScenePolytope {
    bounded: boolean;
    empty: boolean;
    clipped: boolean;
    vertices: ScenePolytopeVertex[];
    edges: [number, number][];
    facets: SceneFacet[];
}

export interface SceneConstraint {
    id: number;
    kind: 'row' | 'bound';
    sense: Sense;
    coeffs: Rational[];
    coeffs_float: number[];
    rhs: Rational;
    rhs_float: number;
    label: string;
}

export interface DictionaryPayload {
    basic: number[];
    nonbasic: number[];
    objective: { constant: Rational; coeffs: Rational[] };
    rows: { var: number; constant: Rational; coeffs: Rational[] }[];
    /** Pre-rendered display lines; the pane shows these verbatim. */
    text: string[];
}

export interface TableauPayload {
    columns: number[];
    basic: number[];
    objective_row: Rational[];
    rows: Rational[][];
    text: string[];
}

export interface SceneIteration {
    index: number;
    phase: 1 | 2;
    /** Display variable id entering the basis, null on terminal steps. */
    entering: number | null;
    leaving: number | null;
    degenerate: boolean;
    objective_value: Rational;
    objective_value_float: number;
    basic_solution: Rational[];
    /** Polytope vertex id, or null for phase-1 points outside the region. */
    vertex: number | null;
    dictionary: DictionaryPayload;
    tableau: TableauPayload;
}

export interface SceneLevel {
    value: Rational;
    value_float: number;
    /** Float geometry of the level set clipped to the region. */
    points: number[][];
    points_exact: Rational[][];
}

export interface BnbBound {
    var: number;
    sense: Sense;
    value: Rational;
    label: string;
}

export interface BnbTreeEntry {
    id: number;
    parent: number | null;
    status: string;
    value: Rational | null;
}

export interface BnbPayload {
    node: number;
    parent: number | null;
    status: string;
    node_count: number;
    added_bounds: BnbBound[];
    parent_branch: [BnbBound, BnbBound] | null;
    branch_pair: [BnbBound, BnbBound] | null;
    incumbent: {
        node: number;
        solution: Rational[];
        value: Rational;
        value_float: number;
    } | null;
    tree: BnbTreeEntry[];
}

export interface SceneOptions {
    form: PaneForm;
    basic_sol: boolean;
    show_basis: boolean;
    objective_ticks: number;
    clip_box: [Rational[], Rational[]] | null;
}

export interface SceneDocument {
    version: string;
    kind: SceneKind;
    lp: LpPayload;
    polytope: ScenePolytope;
    constraints: SceneConstraint[];
    iterations: SceneIteration[];
    /** Vertex ids visited by the recorded walk, in order. */
    path: number[];
    levels: SceneLevel[] | null;
    bnb: BnbPayload | null;
    options: SceneOptions;
}
