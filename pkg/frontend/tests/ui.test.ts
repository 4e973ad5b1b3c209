/// The UI fixture suite: mounts the real widget tree on every built-in
/// scene and checks the shipped interaction guarantees end to end.

import { beforeEach, describe, expect, it } from 'vitest';

import type { App } from '../src/app';
import { render } from '../src/app';
import { tooltipText } from '../src/view';
import { loadBnbNodes, loadSimplexScenes } from './fixtures';

function mountNew(): HTMLElement {
    document.body.innerHTML = '';
    const mount = document.createElement('div');
    mount.id = 'app';
    document.body.appendChild(mount);
    return mount;
}

function iterationSlider(mount: HTMLElement): HTMLInputElement {
    const slider = mount.querySelector<HTMLInputElement>('.lv-slider-row input[step="0.5"]');
    expect(slider).not.toBeNull();
    return slider!;
}

function slideTo(mount: HTMLElement, position: number): void {
    const slider = iterationSlider(mount);
    slider.value = position.toString();
    slider.dispatchEvent(new Event('input'));
}

function paneTitles(mount: HTMLElement): string[] {
    return [...mount.querySelectorAll('.lv-pane h3')].map((h) => h.textContent ?? '');
}

function hover(mount: HTMLElement, app: App, vertexId: number): string {
    const circle = mount.querySelector(`circle[data-vertex="${vertexId}"]`);
    expect(circle).not.toBeNull();
    circle!.dispatchEvent(new MouseEvent('mousemove', { clientX: 120, clientY: 80, bubbles: true }));
    return app.tooltip().textContent ?? '';
}

const builtIns = loadSimplexScenes();

describe('iteration slider across every built-in scene', () => {
    for (const [name, scene] of builtIns) {
        it(`${name}: slider length equals the iteration count`, () => {
            const mount = mountNew();
            render(scene, mount);
            const slider = iterationSlider(mount);
            expect(slider.min).toBe('0');
            expect(slider.max).toBe((scene.iterations.length - 1).toString());
            // Integer stops, one per recorded iteration.
            const stops = (parseFloat(slider.max) - parseFloat(slider.min)) + 1;
            expect(stops).toBe(scene.iterations.length);
        });
    }

    it('also holds for every bnb node document', () => {
        for (const scene of loadBnbNodes()) {
            const mount = mountNew();
            render(scene, mount);
            expect(iterationSlider(mount).max).toBe((scene.iterations.length - 1).toString());
        }
    });
});

describe('vertex hover across every built-in scene', () => {
    for (const [name, scene] of builtIns) {
        it(`${name}: tooltip text equals the scene's exact solution strings`, () => {
            const mount = mountNew();
            const app = render(scene, mount);
            for (const vertex of scene.polytope.vertices) {
                const text = hover(mount, app, vertex.id);
                expect(text).toBe(tooltipText(vertex));
                if (vertex.hover.values !== null) {
                    vertex.hover.labels.forEach((label, i) => {
                        expect(text).toContain(`${label} = ${vertex.hover.values![i]}`);
                    });
                }
                expect(text).toContain(`objective = ${vertex.hover.objective}`);
            }
        });
    }

    it('shows the hand-checked optimum tooltip on the two-product scene', () => {
        const scene = builtIns.get('lego_2d.json')!;
        const mount = mountNew();
        const app = render(scene, mount);
        const best = scene.polytope.vertices.find((v) => v.objective === '52')!;
        expect(hover(mount, app, best.id)).toBe(
            'x1 = 2\nx2 = 2\nx3 = 0\nx4 = 0\nobjective = 52\nbasis {1, 2}',
        );
    });

    it('hides the tooltip again when the pointer leaves', () => {
        const scene = builtIns.get('lego_2d.json')!;
        const mount = mountNew();
        const app = render(scene, mount);
        hover(mount, app, 0);
        expect(app.tooltip().style.display).toBe('block');
        mount.querySelector('circle[data-vertex="0"]')!.dispatchEvent(new MouseEvent('mouseleave'));
        expect(app.tooltip().style.display).toBe('none');
        expect(app.view.hoveredVertex).toBeNull();
    });
});

describe('between-iteration slider positions', () => {
    it('slider position 1.5 renders two algebra panes', () => {
        const scene = builtIns.get('lego_2d.json')!;
        const mount = mountNew();
        render(scene, mount);
        slideTo(mount, 1.5);
        const panes = mount.querySelectorAll('.lv-pane');
        expect(panes.length).toBe(2);
        expect(paneTitles(mount)).toEqual(['Iteration 1', 'Iteration 2']);
    });

    it('integer positions render a single pane', () => {
        const scene = builtIns.get('lego_2d.json')!;
        const mount = mountNew();
        render(scene, mount);
        slideTo(mount, 2);
        expect(mount.querySelectorAll('.lv-pane').length).toBe(1);
        expect(paneTitles(mount)).toEqual(['Iteration 2']);
    });

    it('the two panes show the adjacent dictionaries verbatim', () => {
        const scene = builtIns.get('lego_2d.json')!;
        const mount = mountNew();
        render(scene, mount);
        slideTo(mount, 0.5);
        const bodies = [...mount.querySelectorAll('.lv-pane pre')].map((p) => p.textContent);
        expect(bodies[0]).toBe(scene.iterations[0].dictionary.text.join('\n'));
        expect(bodies[1]).toBe(scene.iterations[1].dictionary.text.join('\n'));
    });

    it('half stops work on every built-in scene with more than one iteration', () => {
        for (const [, scene] of builtIns) {
            if (scene.iterations.length < 2) {
                continue;
            }
            const mount = mountNew();
            render(scene, mount);
            slideTo(mount, 0.5);
            expect(mount.querySelectorAll('.lv-pane').length).toBe(2);
        }
    });
});

describe('branch-and-bound stepping', () => {
    function nextButton(mount: HTMLElement): HTMLButtonElement {
        const button = [...mount.querySelectorAll<HTMLButtonElement>('.lv-nav button')]
            .find((b) => b.textContent!.includes('next'));
        expect(button).toBeDefined();
        return button!;
    }

    function prevButton(mount: HTMLElement): HTMLButtonElement {
        const button = [...mount.querySelectorAll<HTMLButtonElement>('.lv-nav button')]
            .find((b) => b.textContent!.includes('previous'));
        expect(button).toBeDefined();
        return button!;
    }

    function shownNode(mount: HTMLElement, app: App): number {
        const meta = app.view.nodes[app.view.bnbIndex].bnb!;
        // The header and the tree highlight must agree with the state.
        expect(mount.querySelector('.lv-head')!.textContent).toContain(`node ${meta.node}`);
        expect(mount.querySelector('.lv-tree .lv-here')!.textContent).toContain(`node ${meta.node}`);
        return meta.node;
    }

    it('walks all node documents in order and stops at the ends', () => {
        const nodes = loadBnbNodes();
        const mount = mountNew();
        const app = render(nodes, mount);

        const visited = [shownNode(mount, app)];
        for (let i = 0; i < nodes.length + 2; i++) {
            nextButton(mount).click();
            const node = shownNode(mount, app);
            if (visited[visited.length - 1] !== node) {
                visited.push(node);
            }
        }
        expect(visited).toEqual(nodes.map((doc) => doc.bnb!.node)); // 0, 1, …, in order
        expect(shownNode(mount, app)).toBe(nodes.length - 1); // next is a no-op at the end

        for (let i = 0; i < nodes.length + 2; i++) {
            prevButton(mount).click();
        }
        expect(shownNode(mount, app)).toBe(0); // prev is a no-op at the start
    });

    it('disables the boundary button instead of wrapping', () => {
        const nodes = loadBnbNodes();
        const mount = mountNew();
        render(nodes, mount);
        expect(prevButton(mount).disabled).toBe(true);
        expect(nextButton(mount).disabled).toBe(false);
    });

    it('shows each node document\'s own metadata while stepping', () => {
        const nodes = loadBnbNodes();
        const mount = mountNew();
        const app = render(nodes, mount);
        app.step('next');
        app.step('next');
        app.step('next'); // node 3: integral, incumbent (4, 0) worth 20
        const text = mount.textContent!;
        expect(app.view.bnbIndex).toBe(3);
        expect(text).toContain('integral');
        expect(text).toContain('Incumbent: value 20 at (4, 0) from node 3');
    });

    it('renders sibling links instead of buttons on a standalone node page', () => {
        const nodes = loadBnbNodes();
        const mount = mountNew();
        render(nodes[1], mount); // single document: link-based navigation
        const links = [...mount.querySelectorAll<HTMLAnchorElement>('.lv-nav a')];
        expect(links.map((a) => a.getAttribute('href'))).toEqual(['node_000.html', 'node_002.html']);
    });
});

describe('document assembly', () => {
    it('renders all four interface sections for a simplex scene', () => {
        const scene = builtIns.get('lego_2d.json')!;
        const mount = mountNew();
        render(scene, mount);
        const headings = [...mount.querySelectorAll('.lv-panel h2')].map((h) => h.textContent);
        expect(headings).toContain('Feasible region');
        expect(headings).toContain('Constraints (click to highlight)');
        expect(headings).toContain('Algebra');
        expect(headings).toContain('Sliders');
        expect(mount.querySelector('svg.lv-svg')).not.toBeNull();
    });

    it('lists one constraint entry per row plus one per nonnegativity bound', () => {
        for (const [, scene] of builtIns) {
            const mount = mountNew();
            render(scene, mount);
            const items = mount.querySelectorAll('.lv-constraints li');
            expect(items.length).toBe(scene.lp.m + scene.lp.n);
            expect(items.length).toBe(scene.constraints.length);
        }
    });

    it('injects its stylesheet exactly once', () => {
        const mount = mountNew();
        render(builtIns.get('lego_2d.json')!, mount);
        render(builtIns.get('degenerate_2d.json')!, mount);
        expect(document.querySelectorAll('#lv-style').length).toBe(1);
    });
});

beforeEach(() => {
    document.body.innerHTML = '';
    document.getElementById('lv-style')?.remove();
});
