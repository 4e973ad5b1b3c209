/// Projection from scene float coordinates to SVG screen space.
///
/// The only arithmetic in the viewer lives here, and it touches geometry
/// floats exclusively — exact LP values pass through the UI as strings.

export interface Camera {
    yaw: number;
    pitch: number;
    zoom: number;
}

export interface ScreenPoint {
    x: number;
    y: number;
    /** Camera-space depth, used to paint far facets first. */
    depth: number;
}

export type Mapper = (point: number[]) => ScreenPoint;

export const VIEW_W = 520;
export const VIEW_H = 430;
const MARGIN = 36;

export function defaultCamera(): Camera {
    return { yaw: 0.65, pitch: 0.5, zoom: 1 };
}

/** Rotate a 3-D point into camera space (2-D points pass through). */
function orient(point: number[], camera: Camera): [number, number, number] {
    if (point.length === 2) {
        return [point[0], point[1], 0];
    }
    const [x, y, z] = point;
    const cy = Math.cos(camera.yaw);
    const sy = Math.sin(camera.yaw);
    const cp = Math.cos(camera.pitch);
    const sp = Math.sin(camera.pitch);
    // Yaw about the vertical axis, then pitch toward the viewer.
    const rx = cy * x + sy * y;
    const ry = -sy * x + cy * y;
    const rz = z;
    return [rx, cp * rz - sp * ry, sp * rz + cp * ry];
}

/**
 * Build a mapper that fits every given float point into the viewport.
 *
 * For 3-D scenes the fit is computed over all camera orientations at once
 * (by bounding the point cloud's radius) so orbiting never reprojects
 * outside the frame.
 */
export function makeMapper(points: number[][], camera: Camera): Mapper {
    const is3d = points.some((p) => p.length === 3);
    let sx: number;
    let sy: number;
    let cx = 0;
    let cy = 0;
    let cz = 0;
    let scale: number;
    if (points.length === 0) {
        scale = 1;
        sx = sy = 1;
    }
    if (is3d) {
        for (const p of points) {
            cx += p[0];
            cy += p[1];
            cz += p[2] ?? 0;
        }
        cx /= points.length || 1;
        cy /= points.length || 1;
        cz /= points.length || 1;
        let radius = 1e-9;
        for (const p of points) {
            const dx = p[0] - cx;
            const dy = p[1] - cy;
            const dz = (p[2] ?? 0) - cz;
            radius = Math.max(radius, Math.hypot(dx, dy, dz));
        }
        scale = (Math.min(VIEW_W, VIEW_H) / 2 - MARGIN) / radius;
        return (point) => {
            const [ox, oy, oz] = orient([point[0] - cx, point[1] - cy, (point[2] ?? 0) - cz], camera);
            return {
                x: VIEW_W / 2 + ox * scale * camera.zoom,
                y: VIEW_H / 2 - oy * scale * camera.zoom,
                depth: oz,
            };
        };
    }
    let xLo = Infinity;
    let xHi = -Infinity;
    let yLo = Infinity;
    let yHi = -Infinity;
    for (const p of points) {
        xLo = Math.min(xLo, p[0]);
        xHi = Math.max(xHi, p[0]);
        yLo = Math.min(yLo, p[1]);
        yHi = Math.max(yHi, p[1]);
    }
    if (!Number.isFinite(xLo)) {
        xLo = yLo = 0;
        xHi = yHi = 1;
    }
    sx = (VIEW_W - 2 * MARGIN) / Math.max(xHi - xLo, 1e-9);
    sy = (VIEW_H - 2 * MARGIN) / Math.max(yHi - yLo, 1e-9);
    const even = Math.min(sx, sy);
    return (point) => ({
        x: MARGIN + (point[0] - xLo) * even,
        y: VIEW_H - MARGIN - (point[1] - yLo) * even,
        depth: 0,
    });
}

/** Every float point a scene can draw: vertices plus level-set geometry. */
export function scenePoints(vertices: { coords: number[] }[], levels: { points: number[][] }[] | null): number[][] {
    const pts: number[][] = vertices.map((v) => v.coords);
    for (const level of levels ?? []) {
        for (const p of level.points) {
            pts.push(p);
        }
    }
    return pts;
}
