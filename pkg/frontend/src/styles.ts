/// Baseline stylesheet, injected from script so a rendered page stays one
/// self-contained file with no outside references.

const STYLE_ID = 'lv-style';

const CSS = [
    '.lv-root{font:14px/1.45 system-ui,sans-serif;color:#1a1a1a;margin:0 auto;max-width:1180px;padding:1rem;}',
    '.lv-head{margin:0 0 .6rem 0;font-size:1.15rem;font-weight:600;}',
    '.lv-cols{display:flex;flex-wrap:wrap;gap:1rem;align-items:flex-start;}',
    '.lv-left{flex:1 1 430px;min-width:320px;}',
    '.lv-right{flex:1 1 480px;min-width:360px;}',
    '.lv-panel{background:#fff;border:1px solid #ddd;border-radius:8px;padding:.75rem;margin-bottom:1rem;}',
    '.lv-panel h2{margin:0 0 .5rem 0;font-size:.8rem;text-transform:uppercase;letter-spacing:.06em;color:#666;}',
    '.lv-svg{width:100%;height:auto;display:block;background:#f4f7fb;border-radius:6px;touch-action:none;}',
    '.lv-constraints{list-style:none;margin:0;padding:0;}',
    '.lv-constraints li{padding:.25rem .5rem;border-radius:4px;cursor:pointer;font-family:ui-monospace,monospace;}',
    '.lv-constraints li:hover{background:#eef3fa;}',
    '.lv-constraints li.lv-on{background:#fde6c8;border-left:3px solid #e67e22;}',
    '.lv-pane-grid{display:flex;gap:.75rem;flex-wrap:wrap;}',
    '.lv-pane{flex:1 1 200px;min-width:0;}',
    '.lv-pane h3{margin:.1rem 0 .3rem 0;font-size:.85rem;color:#444;}',
    '.lv-pane pre{margin:0;padding:.5rem;background:#0f172a;color:#e2e8f0;border-radius:6px;font:12px/1.5 ui-monospace,monospace;overflow-x:auto;}',
    '.lv-meta{margin:.4rem 0 0 0;font-size:.85rem;color:#555;}',
    '.lv-slider-row{display:flex;align-items:center;gap:.6rem;margin:.4rem 0;}',
    '.lv-slider-row input[type=range]{flex:1;}',
    '.lv-slider-row .lv-val{font-family:ui-monospace,monospace;min-width:5.5rem;text-align:right;}',
    '.lv-btn{border:1px solid #bbb;background:#f6f6f6;border-radius:4px;padding:.2rem .6rem;cursor:pointer;font:inherit;}',
    '.lv-btn:hover{background:#ececec;}',
    '.lv-btn:disabled{opacity:.45;cursor:default;}',
    '.lv-tip{position:fixed;pointer-events:none;background:#0f172a;color:#e2e8f0;padding:.45rem .6rem;border-radius:6px;font:12px/1.5 ui-monospace,monospace;z-index:10;white-space:pre;display:none;box-shadow:0 2px 8px rgba(0,0,0,.35);}',
    '.lv-tree{list-style:none;margin:0;padding-left:1rem;font-family:ui-monospace,monospace;font-size:.85rem;}',
    '.lv-tree li{margin:.1rem 0;}',
    '.lv-tree .lv-here{background:#fde6c8;border-radius:3px;padding:0 .25rem;font-weight:600;}',
    '.lv-banner{margin:2rem;padding:1rem;border:2px solid #c0392b;background:#fdecea;color:#c0392b;font:14px/1.4 system-ui,sans-serif;border-radius:6px;}',
].join('');

/** Add the stylesheet to the document once. */
export function ensureStyles(root: Document): void {
    if (root.getElementById(STYLE_ID) !== null) {
        return;
    }
    const style = root.createElement('style');
    style.id = STYLE_ID;
    style.textContent = CSS;
    root.head.appendChild(style);
}
