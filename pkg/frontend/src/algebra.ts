/// Interface section C: the algebra pane.
///
/// Shows the dictionary or tableau text of the iteration under the slider,
/// verbatim from the scene. At half positions it shows the two neighbouring
/// iterations side by side.

import type { SceneDocument } from './types';
import type { ViewState } from './view';
import { currentScene, paneIndices } from './view';

export class AlgebraPane {
    public root: HTMLElement;
    public ontoggleform: () => void;
    private _grid: HTMLElement;
    private _meta: HTMLElement;
    private _button: HTMLButtonElement;

    constructor() {
        const template = document.createElement('template');
        template.innerHTML = `<div>
            <button class="lv-btn" type="button"></button>
            <div class="lv-pane-grid"></div>
            <p class="lv-meta"></p>
        </div>`;
        this.root = template.content.firstChild! as HTMLElement;
        this._grid = this.root.querySelector('.lv-pane-grid')!;
        this._meta = this.root.querySelector('.lv-meta')!;
        this._button = this.root.querySelector('button')!;
        this.ontoggleform = () => undefined;
        this._button.addEventListener('click', () => this.ontoggleform());
    }

    private _paneFor(scene: SceneDocument, index: number, form: ViewState['form']): HTMLElement {
        const iteration = scene.iterations[index];
        const pane = document.createElement('div');
        pane.className = 'lv-pane';
        const title = document.createElement('h3');
        title.textContent = `Iteration ${index}${iteration.phase === 1 ? ' (phase 1)' : ''}`;
        const body = document.createElement('pre');
        const lines = form === 'tableau' ? iteration.tableau.text : iteration.dictionary.text;
        body.textContent = lines.join('\n');
        pane.appendChild(title);
        pane.appendChild(body);
        return pane;
    }

    public update(view: ViewState): void {
        const scene = currentScene(view);
        this._button.textContent = view.form === 'dictionary' ? 'show tableau' : 'show dictionary';
        while (this._grid.firstChild) {
            this._grid.removeChild(this._grid.firstChild);
        }
        for (const index of paneIndices(view.sliderPosition)) {
            this._grid.appendChild(this._paneFor(scene, index, view.form));
        }
        const iteration = scene.iterations[Math.floor(view.sliderPosition)];
        const bits = [`objective = ${iteration.objective_value}`];
        if (iteration.entering !== null) {
            bits.push(`entering x${iteration.entering}`);
        }
        if (iteration.leaving !== null) {
            bits.push(`leaving x${iteration.leaving}`);
        }
        if (iteration.degenerate) {
            bits.push('degenerate step');
        }
        this._meta.textContent = bits.join('  ·  ');
    }
}
