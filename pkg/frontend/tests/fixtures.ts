/// Fixture loading for the test suite.
///
/// The fixtures are scene documents produced by the solver package
/// (regenerate with `python3 scripts/make_fixtures.py` from the repository
/// root); the manifest lists every built-in scene and the bnb node set.

import { readFileSync } from 'node:fs';
import { dirname, join } from 'node:path';
import { fileURLToPath } from 'node:url';

import { parseScene } from '../src/scene';
import type { SceneDocument } from '../src/types';

const FIXTURE_DIR = join(dirname(fileURLToPath(import.meta.url)), '..', 'fixtures');

export interface Manifest {
    simplex: string[];
    bnb: string[];
}

export function manifest(): Manifest {
    return JSON.parse(readFileSync(join(FIXTURE_DIR, 'manifest.json'), 'utf-8')) as Manifest;
}

export function fixtureText(name: string): string {
    return readFileSync(join(FIXTURE_DIR, name), 'utf-8');
}

export function loadFixture(name: string): SceneDocument {
    return parseScene(fixtureText(name));
}

/** Every built-in simplex scene, keyed by fixture name. */
export function loadSimplexScenes(): Map<string, SceneDocument> {
    return new Map(manifest().simplex.map((name) => [name, loadFixture(name)]));
}

/** The bnb node documents in exploration order. */
export function loadBnbNodes(): SceneDocument[] {
    return manifest().bnb.map((name) => loadFixture(name));
}
