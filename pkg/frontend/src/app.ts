/// The assembled viewer: sections A–D wired to one ViewState.
///
/// The app owns the state and re-renders widgets on every transition; the
/// widgets themselves are dumb views. Loading several bnb_node documents
/// turns on in-place node stepping.

import { AlgebraPane } from './algebra';
import { BnbPanel } from './bnb';
import { ConstraintList, IterationSlider, ObjectiveSlider } from './controls';
import { RegionView } from './region';
import { ensureStyles } from './styles';
import type { SceneDocument } from './types';
import type { StepDirection, ViewState } from './view';
import {
    createView, currentScene, hoverVertex, objectiveSlide, setSlider,
    stepBnb, toggleConstraint, toggleForm,
} from './view';

function panel(title: string | null, ...children: (HTMLElement | SVGElement)[]): HTMLElement {
    const div = document.createElement('div');
    div.className = 'lv-panel';
    if (title !== null) {
        const h2 = document.createElement('h2');
        h2.textContent = title;
        div.appendChild(h2);
    }
    for (const child of children) {
        div.appendChild(child);
    }
    return div;
}

export class App {
    public view: ViewState;
    private _mount: HTMLElement;
    private _region!: RegionView;
    private _constraints!: ConstraintList;
    private _algebra!: AlgebraPane;
    private _iterSlider!: IterationSlider;
    private _objSlider!: ObjectiveSlider;
    private _bnbPanel: BnbPanel | null;

    constructor(documents: SceneDocument[], mount: HTMLElement, start = 0) {
        ensureStyles(mount.ownerDocument);
        this.view = createView(documents, start);
        this._mount = mount;
        this._bnbPanel = null;
        this._build();
    }

    /** Apply a state transition and refresh the widgets. */
    private _apply(next: ViewState): void {
        const sceneChanged = next.bnbIndex !== this.view.bnbIndex;
        this.view = next;
        if (sceneChanged) {
            this._build();
        } else {
            this._refresh();
        }
    }

    public step(direction: StepDirection): void {
        this._apply(stepBnb(this.view, direction));
    }

    private _build(): void {
        const scene = currentScene(this.view);
        while (this._mount.firstChild) {
            this._mount.removeChild(this._mount.firstChild);
        }

        this._region = new RegionView();
        this._region.onhover = (id) => {
            this.view = hoverVertex(this.view, id);
        };
        this._constraints = new ConstraintList(scene.constraints);
        this._constraints.ontoggle = (id) => this._apply(toggleConstraint(this.view, id));
        this._algebra = new AlgebraPane();
        this._algebra.ontoggleform = () => this._apply(toggleForm(this.view));
        this._iterSlider = new IterationSlider(scene.iterations.length);
        this._iterSlider.onchange = (position) => this._apply(setSlider(this.view, position));
        this._objSlider = new ObjectiveSlider(scene.levels);
        this._objSlider.onchange = (tick) => this._apply(objectiveSlide(this.view, tick));

        const right: HTMLElement[] = [];
        if (scene.kind === 'bnb_node' && scene.bnb !== null) {
            this._bnbPanel = new BnbPanel(this.view.nodes.length > 1);
            this._bnbPanel.onstep = (direction) => this.step(direction);
            right.push(panel(null, this._bnbPanel.root));
        } else {
            this._bnbPanel = null;
        }
        right.push(panel('Algebra', this._algebra.root));
        right.push(panel('Sliders', this._iterSlider.root, this._objSlider.root));

        const head = document.createElement('div');
        head.className = 'lv-head';
        const title = scene.kind === 'bnb_node'
            ? `Branch & bound — node ${scene.bnb!.node}`
            : 'Simplex visualization';
        head.textContent = `${title}  ·  max over ${scene.lp.n} variables, ${scene.lp.m} constraints`;

        const left = document.createElement('div');
        left.className = 'lv-left';
        left.appendChild(panel('Feasible region', this._region.root));
        left.appendChild(panel('Constraints (click to highlight)', this._constraints.root));

        const rightCol = document.createElement('div');
        rightCol.className = 'lv-right';
        for (const el of right) {
            rightCol.appendChild(el);
        }

        const cols = document.createElement('div');
        cols.className = 'lv-cols';
        cols.appendChild(left);
        cols.appendChild(rightCol);

        const root = document.createElement('div');
        root.className = 'lv-root';
        root.appendChild(head);
        root.appendChild(cols);
        this._mount.appendChild(root);
        this._refresh();
    }

    private _refresh(): void {
        const scene = currentScene(this.view);
        this._region.update(this.view);
        this._constraints.update(this.view.highlightedConstraints);
        this._algebra.update(this.view);
        this._iterSlider.update(this.view.sliderPosition);
        this._objSlider.update(this.view.objectiveTick);
        if (this._bnbPanel !== null && scene.bnb !== null) {
            this._bnbPanel.update(scene.bnb);
        }
    }

    /** The region's tooltip element — exposed for the fixture suite. */
    public tooltip(): HTMLElement {
        return this._region.tooltip();
    }
}

/** Render one scene (or an ordered node list) into a mount element. */
export function render(documents: SceneDocument | SceneDocument[], mount: HTMLElement, start = 0): App {
    const list = Array.isArray(documents) ? documents : [documents];
    return new App(list, mount, start);
}
