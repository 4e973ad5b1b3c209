/// Interface section A: the feasible region.
///
/// Draws the polytope (hull fill in 2-D, depth-sorted translucent facets in
/// 3-D), its edges, the level-set overlay, the walk path up to the slider
/// position (with a partially traversed segment at half stops), and the
/// vertices with hover tooltips. 3-D scenes orbit on drag and zoom on wheel.

import type { SceneDocument, ScenePolytopeVertex } from './types';
import type { Camera, Mapper, ScreenPoint } from './project';
import { VIEW_H, VIEW_W, defaultCamera, makeMapper, scenePoints } from './project';
import type { ViewState } from './view';
import { currentScene, tooltipText } from './view';

const SVG_NS = 'http://www.w3.org/2000/svg';

const FILL_2D = '#93c5fd';
const FACET_FILL = '#60a5fa';
const SYNTHETIC_FILL = '#cbd5e1';
const EDGE_STROKE = '#1e3a8a';
const HIGHLIGHT = '#e67e22';
const LEVEL_STROKE = '#16a34a';
const PATH_STROKE = '#dc2626';

function svgEl<K extends keyof SVGElementTagNameMap>(tag: K, attrs: Record<string, string | number>): SVGElementTagNameMap[K] {
    const el = document.createElementNS(SVG_NS, tag);
    for (const [key, value] of Object.entries(attrs)) {
        el.setAttribute(key, value.toString());
    }
    return el;
}

function polyPoints(points: ScreenPoint[]): string {
    return points.map((p) => `${p.x.toFixed(2)},${p.y.toFixed(2)}`).join(' ');
}

/** Counter-clockwise ordering of projected points around their centroid. */
function hullOrder(points: ScreenPoint[]): ScreenPoint[] {
    let cx = 0;
    let cy = 0;
    for (const p of points) {
        cx += p.x;
        cy += p.y;
    }
    cx /= points.length || 1;
    cy /= points.length || 1;
    return [...points].sort((a, b) => Math.atan2(a.y - cy, a.x - cx) - Math.atan2(b.y - cy, b.x - cx));
}

/** Vertex ids visited by the walk, aligned with iteration indices. */
export function walkVertices(scene: SceneDocument): (number | null)[] {
    return scene.iterations.map((it) => it.vertex);
}

export class RegionView {
    public root: SVGSVGElement;
    public onhover: (id: number | null) => void;
    private _camera: Camera;
    private _tip: HTMLElement;
    private _view: ViewState | null;

    constructor() {
        this.root = svgEl('svg', {
            class: 'lv-svg',
            viewBox: `0 0 ${VIEW_W} ${VIEW_H}`,
            width: VIEW_W,
            height: VIEW_H,
        });
        this.onhover = () => undefined;
        this._camera = defaultCamera();
        this._view = null;
        this._tip = document.createElement('div');
        this._tip.className = 'lv-tip';
        document.body.appendChild(this._tip);
        this._wireOrbit();
    }

    private _wireOrbit(): void {
        let dragging = false;
        let lastX = 0;
        let lastY = 0;
        this.root.addEventListener('pointerdown', (evt) => {
            if (!this._is3d()) {
                return;
            }
            dragging = true;
            lastX = evt.clientX;
            lastY = evt.clientY;
        });
        this.root.addEventListener('pointermove', (evt) => {
            if (!dragging) {
                return;
            }
            this._camera.yaw += (evt.clientX - lastX) * 0.008;
            this._camera.pitch = Math.max(-1.4, Math.min(1.4, this._camera.pitch + (evt.clientY - lastY) * 0.008));
            lastX = evt.clientX;
            lastY = evt.clientY;
            this._redraw();
        });
        this.root.addEventListener('pointerup', () => {
            dragging = false;
        });
        this.root.addEventListener('wheel', (evt) => {
            if (!this._is3d()) {
                return;
            }
            evt.preventDefault();
            const factor = (evt as WheelEvent).deltaY < 0 ? 1.1 : 0.9;
            this._camera.zoom = Math.max(0.3, Math.min(5, this._camera.zoom * factor));
            this._redraw();
        });
    }

    private _is3d(): boolean {
        return this._view !== null && currentScene(this._view).lp.n === 3;
    }

    private _redraw(): void {
        if (this._view !== null) {
            this.update(this._view);
        }
    }

    private _showTip(evt: MouseEvent, text: string): void {
        this._tip.textContent = text;
        this._tip.style.display = 'block';
        this._tip.style.left = `${evt.clientX + 14}px`;
        this._tip.style.top = `${evt.clientY + 14}px`;
    }

    private _hideTip(): void {
        this._tip.style.display = 'none';
    }

    /** The tooltip element — exposed for the fixture suite. */
    public tooltip(): HTMLElement {
        return this._tip;
    }

    public update(view: ViewState): void {
        this._view = view;
        const scene = currentScene(view);
        const poly = scene.polytope;
        while (this.root.firstChild) {
            this.root.removeChild(this.root.firstChild);
        }
        const mapper = makeMapper(scenePoints(poly.vertices, scene.levels), this._camera);
        const byId = new Map(poly.vertices.map((v) => [v.id, v]));
        const mapId = (id: number): ScreenPoint => mapper(byId.get(id)!.coords);

        this._drawBody(scene, mapper, mapId, view);
        this._drawEdges(scene, mapId, view);
        if (view.showLevel && scene.levels) {
            this._drawLevel(scene, mapper, view.objectiveTick);
        }
        this._drawPath(scene, mapId, view.sliderPosition);
        this._drawVertices(scene, mapId, view);
    }

    private _drawBody(scene: SceneDocument, mapper: Mapper, mapId: (id: number) => ScreenPoint, view: ViewState): void {
        const poly = scene.polytope;
        if (scene.lp.n === 3) {
            const facets = poly.facets.map((facet) => {
                const pts = facet.vertices.map(mapId);
                const depth = pts.reduce((acc, p) => acc + p.depth, 0) / (pts.length || 1);
                return { facet, pts, depth };
            });
            facets.sort((a, b) => a.depth - b.depth);
            for (const { facet, pts } of facets) {
                const onHighlight = facet.constraint !== null && view.highlightedConstraints.has(facet.constraint);
                this.root.appendChild(svgEl('polygon', {
                    points: polyPoints(pts),
                    fill: onHighlight ? HIGHLIGHT : facet.synthetic ? SYNTHETIC_FILL : FACET_FILL,
                    'fill-opacity': onHighlight ? 0.55 : 0.3,
                    stroke: EDGE_STROKE,
                    'stroke-opacity': 0.25,
                }));
            }
            return;
        }
        if (poly.vertices.length >= 3) {
            const hull = hullOrder(poly.vertices.map((v) => mapper(v.coords)));
            this.root.appendChild(svgEl('polygon', {
                points: polyPoints(hull),
                fill: FILL_2D,
                'fill-opacity': 0.45,
                stroke: 'none',
            }));
        }
    }

    private _drawEdges(scene: SceneDocument, mapId: (id: number) => ScreenPoint, view: ViewState): void {
        const tight = new Map(scene.polytope.vertices.map((v) => [v.id, new Set(v.tight)]));
        for (const [a, b] of scene.polytope.edges) {
            const pa = mapId(a);
            const pb = mapId(b);
            const shared = [...(tight.get(a) ?? [])].filter((cid) => tight.get(b)?.has(cid));
            const onHighlight = shared.some((cid) => view.highlightedConstraints.has(cid));
            this.root.appendChild(svgEl('line', {
                x1: pa.x, y1: pa.y, x2: pb.x, y2: pb.y,
                stroke: onHighlight ? HIGHLIGHT : EDGE_STROKE,
                'stroke-width': onHighlight ? 3.5 : 1.6,
                'stroke-opacity': onHighlight ? 1 : 0.8,
            }));
        }
    }

    private _drawLevel(scene: SceneDocument, mapper: Mapper, tick: number): void {
        const level = scene.levels![tick];
        const pts = level.points.map((p) => mapper(p));
        if (pts.length === 1) {
            this.root.appendChild(svgEl('circle', {
                cx: pts[0].x, cy: pts[0].y, r: 6,
                fill: 'none', stroke: LEVEL_STROKE, 'stroke-width': 2.5,
            }));
        } else if (pts.length === 2) {
            this.root.appendChild(svgEl('line', {
                x1: pts[0].x, y1: pts[0].y, x2: pts[1].x, y2: pts[1].y,
                stroke: LEVEL_STROKE, 'stroke-width': 2.5, 'stroke-dasharray': '7 4',
            }));
        } else if (pts.length > 2) {
            this.root.appendChild(svgEl('polygon', {
                points: polyPoints(hullOrder(pts)),
                fill: LEVEL_STROKE, 'fill-opacity': 0.15,
                stroke: LEVEL_STROKE, 'stroke-width': 2, 'stroke-dasharray': '7 4',
            }));
        }
    }

    private _drawPath(scene: SceneDocument, mapId: (id: number) => ScreenPoint, position: number): void {
        const walk = walkVertices(scene);
        const lo = Math.floor(position);
        const segments: [ScreenPoint, ScreenPoint][] = [];
        for (let i = 1; i <= lo; i++) {
            const prev = walk[i - 1];
            const here = walk[i];
            if (prev !== null && here !== null && prev !== here) {
                segments.push([mapId(prev), mapId(here)]);
            }
        }
        const frac = position - lo;
        if (frac > 0) {
            const prev = walk[lo];
            const next = walk[lo + 1];
            if (prev !== null && next !== null && prev !== next) {
                const pa = mapId(prev);
                const pb = mapId(next);
                segments.push([pa, {
                    x: pa.x + (pb.x - pa.x) * frac,
                    y: pa.y + (pb.y - pa.y) * frac,
                    depth: 0,
                }]);
            }
        }
        for (const [pa, pb] of segments) {
            this.root.appendChild(svgEl('line', {
                x1: pa.x, y1: pa.y, x2: pb.x, y2: pb.y,
                stroke: PATH_STROKE, 'stroke-width': 3, 'stroke-linecap': 'round',
            }));
        }
    }

    private _drawVertices(scene: SceneDocument, mapId: (id: number) => ScreenPoint, view: ViewState): void {
        const walk = walkVertices(scene);
        const current = walk[Math.floor(view.sliderPosition)];
        const visited = new Set(walk.filter((id) => id !== null));
        for (const vertex of scene.polytope.vertices) {
            const p = mapId(vertex.id);
            const isCurrent = vertex.id === current;
            const circle = svgEl('circle', {
                cx: p.x, cy: p.y, r: isCurrent ? 7 : 5,
                fill: isCurrent ? PATH_STROKE : visited.has(vertex.id) ? '#f87171' : EDGE_STROKE,
                stroke: '#fff', 'stroke-width': 1.5, cursor: 'pointer',
                'data-vertex': vertex.id,
            });
            circle.addEventListener('mousemove', (evt) => {
                this.onhover(vertex.id);
                this._showTip(evt as MouseEvent, tooltipText(vertex as ScenePolytopeVertex));
            });
            circle.addEventListener('mouseleave', () => {
                this.onhover(null);
                this._hideTip();
            });
            this.root.appendChild(circle);
        }
    }
}
