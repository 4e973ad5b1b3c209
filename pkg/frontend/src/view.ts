/// View state and its transitions — pure data, no DOM.
///
/// The widgets render a ViewState; every interaction maps an old state to a
/// new one through the functions here, which keeps the invariants (slider in
/// range, hovered vertex exists, node index valid) in one testable place.

import type { PaneForm, SceneDocument, ScenePolytopeVertex } from './types';

export type StepDirection = 'next' | 'prev';

export interface ViewState {
    /** The loaded documents: one simplex scene, or a full node list. */
    nodes: SceneDocument[];
    /** Which document is displayed. */
    bnbIndex: number;
    /** Real position in [0, iterations−1]; halves mean "between two". */
    sliderPosition: number;
    /** Index into scene.levels (meaningful only when levels exist). */
    objectiveTick: number;
    /** Whether the level-set overlay is drawn. */
    showLevel: boolean;
    highlightedConstraints: Set<number>;
    hoveredVertex: number | null;
    form: PaneForm;
}

/** The displayed document. */
export function currentScene(view: ViewState): SceneDocument {
    return view.nodes[view.bnbIndex];
}

function freshFor(scene: SceneDocument): Omit<ViewState, 'nodes' | 'bnbIndex'> {
    return {
        sliderPosition: scene.iterations.length - 1,
        objectiveTick: scene.levels ? scene.levels.length - 1 : 0,
        showLevel: false,
        highlightedConstraints: new Set(),
        hoveredVertex: null,
        form: scene.options.form,
    };
}

/** Initial state for a loaded document list (sorted bnb nodes or one scene). */
export function createView(nodes: SceneDocument[], start = 0): ViewState {
    if (nodes.length === 0) {
        throw new Error('no documents loaded');
    }
    if (start < 0 || start >= nodes.length) {
        throw new Error(`start index ${start} out of range`);
    }
    return { nodes, bnbIndex: start, ...freshFor(nodes[start]) };
}

/** Clamp a requested slider position into the scene's valid range. */
export function clampSlider(scene: SceneDocument, position: number): number {
    const hi = scene.iterations.length - 1;
    if (!Number.isFinite(position)) {
        return hi;
    }
    return Math.min(hi, Math.max(0, position));
}

/**
 * The iteration panes shown at a slider position: one index on integers,
 * the two neighbours otherwise ("the LP at both iterations").
 */
export function paneIndices(position: number): number[] {
    const lo = Math.floor(position);
    const hi = Math.ceil(position);
    return hi === lo ? [lo] : [lo, hi];
}

export function setSlider(view: ViewState, position: number): ViewState {
    return { ...view, sliderPosition: clampSlider(currentScene(view), position) };
}

/** Select an objective tick and turn the overlay on. */
export function objectiveSlide(view: ViewState, tick: number): ViewState {
    const levels = currentScene(view).levels;
    if (!levels) {
        return view; // slider is disabled without levels
    }
    const clamped = Math.min(levels.length - 1, Math.max(0, Math.round(tick)));
    return { ...view, objectiveTick: clamped, showLevel: true };
}

export function toggleConstraint(view: ViewState, id: number): ViewState {
    const highlighted = new Set(view.highlightedConstraints);
    if (highlighted.has(id)) {
        highlighted.delete(id);
    } else {
        highlighted.add(id);
    }
    return { ...view, highlightedConstraints: highlighted };
}

export function hoverVertex(view: ViewState, id: number | null): ViewState {
    if (id !== null && !currentScene(view).polytope.vertices.some((v) => v.id === id)) {
        return view;
    }
    return { ...view, hoveredVertex: id };
}

export function toggleForm(view: ViewState): ViewState {
    return { ...view, form: view.form === 'dictionary' ? 'tableau' : 'dictionary' };
}

/**
 * Swap the displayed node document. A no-op at either end of the list,
 * so repeated "next" presses walk the documents in order and stop.
 */
export function stepBnb(view: ViewState, direction: StepDirection): ViewState {
    const delta = direction === 'next' ? 1 : -1;
    const index = view.bnbIndex + delta;
    if (index < 0 || index >= view.nodes.length) {
        return view;
    }
    return { nodes: view.nodes, bnbIndex: index, ...freshFor(view.nodes[index]) };
}

/** File name of a sibling node page in a multi-page export. */
export function nodeFileName(id: number): string {
    return `node_${String(id).padStart(3, '0')}.html`;
}

/**
 * Tooltip text for a vertex, assembled purely from the scene's exact
 * strings: one "name = value" line per variable (when present), the
 * objective, and any defining bases.
 */
export function tooltipText(vertex: ScenePolytopeVertex): string {
    const hover = vertex.hover;
    const lines: string[] = [];
    if (hover.values !== null) {
        hover.labels.forEach((label, i) => {
            lines.push(`${label} = ${hover.values![i]}`);
        });
    }
    lines.push(`objective = ${hover.objective}`);
    if (hover.bases !== null) {
        for (const basis of hover.bases) {
            lines.push(`basis {${basis.join(', ')}}`);
        }
    }
    return lines.join('\n');
}
