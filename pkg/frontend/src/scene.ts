/// Scene loading: JSON text → typed document, plus the embedded-page path.
///
/// Only version-1 documents are accepted; anything else raises SceneError
/// with a message fit for the error banner. The checks here are shape
/// checks for the fields the viewer touches — deep semantic validation is
/// the producer's job.

import type { SceneDocument } from './types';

export class SceneError extends Error {
    constructor(message: string) {
        super(message);
        this.name = 'SceneError';
    }
}

/** Id of the page element whose text content holds the scene JSON. */
export const SCENE_DATA_ID = 'scene-data';

function fail(message: string): never {
    throw new SceneError(message);
}

function isRecord(value: unknown): value is Record<string, unknown> {
    return typeof value === 'object' && value !== null && !Array.isArray(value);
}

/** Parse one scene document from JSON text. */
export function parseScene(text: string): SceneDocument {
    let raw: unknown;
    try {
        raw = JSON.parse(text);
    } catch (err) {
        fail(`unreadable scene data: ${(err as Error).message}`);
    }
    if (!isRecord(raw)) {
        fail('scene data is not a JSON object');
    }
    const version = raw['version'];
    if (typeof version !== 'string') {
        fail('scene has no version string');
    }
    const major = parseInt(version.split('.')[0], 10);
    if (major !== 1) {
        fail(`unsupported scene version ${version} (this viewer reads version 1)`);
    }
    const kind = raw['kind'];
    if (kind !== 'simplex' && kind !== 'bnb_node') {
        fail(`unknown scene kind ${JSON.stringify(kind)}`);
    }
    for (const key of ['lp', 'polytope', 'constraints', 'iterations', 'path', 'options']) {
        if (!(key in raw)) {
            fail(`scene is missing the ${key} field`);
        }
    }
    const doc = raw as unknown as SceneDocument;
    if (!Array.isArray(doc.iterations) || doc.iterations.length === 0) {
        fail('scene has no iterations');
    }
    if (doc.kind === 'bnb_node' && !isRecord(doc.bnb)) {
        fail('bnb_node scene is missing its bnb payload');
    }
    const n = doc.lp.n;
    if (n !== 2 && n !== 3) {
        fail(`scene is ${n}-dimensional (this viewer draws 2 or 3)`);
    }
    return doc;
}

/**
 * Read the scene embedded in the current page, if any.
 *
 * Returns null when the page has no scene element at all (the caller
 * decides whether that is an error); throws SceneError on bad content.
 */
export function readEmbeddedScene(root: Document): SceneDocument | null {
    const el = root.getElementById(SCENE_DATA_ID);
    if (el === null) {
        return null;
    }
    return parseScene(el.textContent ?? '');
}
