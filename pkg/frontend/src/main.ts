/// Browser entry point: render the scene embedded in the current page.
///
/// Errors never fail silently — a bad or missing scene shows a banner,
/// including the version banner for documents newer than this viewer reads.

import { render } from './app';
import { SceneError, readEmbeddedScene } from './scene';

function showBanner(message: string): void {
    const div = document.createElement('div');
    div.className = 'lv-banner';
    div.textContent = message;
    document.body.appendChild(div);
}

function boot(): void {
    let scene;
    try {
        scene = readEmbeddedScene(document);
    } catch (err) {
        if (err instanceof SceneError) {
            showBanner(err.message);
            return;
        }
        throw err;
    }
    if (scene === null) {
        showBanner('No scene data found on this page.');
        return;
    }
    const mount = document.getElementById('app') ?? document.body;
    render(scene, mount);
}

boot();
