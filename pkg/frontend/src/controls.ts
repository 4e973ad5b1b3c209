/// Interface sections B and D: the constraint list and the two sliders.

import type { SceneConstraint, SceneLevel } from './types';

/**
 * The iteration slider (section D, top). Integer stops are iterations;
 * the half stops in between show two algebra panes at once.
 */
export class IterationSlider {
    public root: HTMLElement;
    public onchange: (position: number) => void;
    private _slider: HTMLInputElement;
    private _value: HTMLElement;
    private _max: number;

    constructor(iterationCount: number) {
        this._max = iterationCount - 1;
        const template = document.createElement('template');
        template.innerHTML = `<div class="lv-slider-row">
            <span>iteration</span>
            <input type="range" min="0" step="0.5">
            <span class="lv-val"></span>
        </div>`;
        this.root = template.content.firstChild! as HTMLElement;
        this._slider = this.root.querySelector('input')!;
        this._slider.max = this._max.toString();
        this._value = this.root.querySelector('.lv-val')!;
        this.onchange = () => undefined;
        this._slider.addEventListener('input', () => {
            this.onchange(parseFloat(this._slider.value));
        });
    }

    public update(position: number): void {
        this._slider.value = position.toString();
        this._value.textContent = `${position} / ${this._max}`;
    }

    public position(): number {
        return parseFloat(this._slider.value);
    }
}

/**
 * The objective-value slider (section D, bottom). Each stop is one recorded
 * level set; the label shows the tick's exact value string. Without levels
 * (unbounded objective) the slider renders disabled.
 */
export class ObjectiveSlider {
    public root: HTMLElement;
    public onchange: (tick: number) => void;
    private _slider: HTMLInputElement;
    private _value: HTMLElement;
    private _levels: SceneLevel[] | null;

    constructor(levels: SceneLevel[] | null) {
        this._levels = levels;
        const template = document.createElement('template');
        template.innerHTML = `<div class="lv-slider-row">
            <span>objective</span>
            <input type="range" min="0" step="1">
            <span class="lv-val"></span>
        </div>`;
        this.root = template.content.firstChild! as HTMLElement;
        this._slider = this.root.querySelector('input')!;
        this._value = this.root.querySelector('.lv-val')!;
        this.onchange = () => undefined;
        if (levels === null || levels.length === 0) {
            this._slider.disabled = true;
            this._value.textContent = 'n/a';
            return;
        }
        this._slider.max = (levels.length - 1).toString();
        this._slider.addEventListener('input', () => {
            this.onchange(parseInt(this._slider.value, 10));
        });
    }

    public update(tick: number): void {
        if (this._levels === null || this._levels.length === 0) {
            return;
        }
        this._slider.value = tick.toString();
        this._value.textContent = this._levels[tick].value;
    }
}

/** The clickable constraint list (section B). */
export class ConstraintList {
    public root: HTMLElement;
    public ontoggle: (id: number) => void;
    private _items: Map<number, HTMLLIElement>;

    constructor(constraints: SceneConstraint[]) {
        this.root = document.createElement('ul');
        this.root.className = 'lv-constraints';
        this.ontoggle = () => undefined;
        this._items = new Map();
        for (const constraint of constraints) {
            const li = document.createElement('li');
            li.textContent = constraint.label;
            li.addEventListener('click', () => this.ontoggle(constraint.id));
            this._items.set(constraint.id, li);
            this.root.appendChild(li);
        }
    }

    public update(highlighted: Set<number>): void {
        for (const [id, li] of this._items) {
            li.classList.toggle('lv-on', highlighted.has(id));
        }
    }
}
