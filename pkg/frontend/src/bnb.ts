/// The branch-and-bound panel: node metadata, prev/next stepping, and the
/// search-tree outline with the displayed node highlighted.
///
/// With the full node list loaded, stepping swaps documents in place; on a
/// standalone exported page (one document per file) the panel also offers
/// plain links to the sibling node pages.

import type { BnbPayload } from './types';
import { nodeFileName } from './view';
import type { StepDirection } from './view';

function metaLine(text: string): HTMLElement {
    const p = document.createElement('p');
    p.className = 'lv-meta';
    p.textContent = text;
    return p;
}

export class BnbPanel {
    public root: HTMLElement;
    public onstep: (direction: StepDirection) => void;
    /** Whether stepping swaps in-place (node list loaded) or links out. */
    private _inPlace: boolean;

    constructor(inPlace: boolean) {
        this.root = document.createElement('div');
        this.onstep = () => undefined;
        this._inPlace = inPlace;
    }

    public update(meta: BnbPayload): void {
        while (this.root.firstChild) {
            this.root.removeChild(this.root.firstChild);
        }
        const heading = document.createElement('h2');
        heading.textContent = 'Branch & bound';
        this.root.appendChild(heading);

        const where = meta.parent === null ? ' (root)' : `, parent ${meta.parent}`;
        this.root.appendChild(metaLine(`Node ${meta.node} of ${meta.node_count} — ${meta.status}${where}`));
        if (meta.added_bounds.length > 0) {
            this.root.appendChild(metaLine(`Bounds: ${meta.added_bounds.map((b) => b.label).join(', ')}`));
        }
        if (meta.parent_branch !== null) {
            this.root.appendChild(metaLine(`Parent branched on: ${meta.parent_branch.map((b) => b.label).join('  |  ')}`));
        }
        if (meta.branch_pair !== null) {
            this.root.appendChild(metaLine(`Branches into: ${meta.branch_pair.map((b) => b.label).join('  |  ')}`));
        }
        if (meta.incumbent !== null) {
            this.root.appendChild(metaLine(
                `Incumbent: value ${meta.incumbent.value} at (${meta.incumbent.solution.join(', ')}) from node ${meta.incumbent.node}`,
            ));
        }
        this.root.appendChild(this._nav(meta));
        this.root.appendChild(this._tree(meta));
    }

    private _nav(meta: BnbPayload): HTMLElement {
        const nav = document.createElement('p');
        nav.className = 'lv-meta lv-nav';
        const prevOk = meta.node > 0;
        const nextOk = meta.node + 1 < meta.node_count;
        if (this._inPlace) {
            const prev = document.createElement('button');
            prev.className = 'lv-btn';
            prev.type = 'button';
            prev.textContent = '◀ previous node';
            prev.disabled = !prevOk;
            prev.addEventListener('click', () => this.onstep('prev'));
            const next = document.createElement('button');
            next.className = 'lv-btn';
            next.type = 'button';
            next.textContent = 'next node ▶';
            next.disabled = !nextOk;
            next.addEventListener('click', () => this.onstep('next'));
            nav.appendChild(prev);
            nav.appendChild(document.createTextNode(' '));
            nav.appendChild(next);
            return nav;
        }
        if (prevOk) {
            const a = document.createElement('a');
            a.href = nodeFileName(meta.node - 1);
            a.textContent = '◀ previous node';
            nav.appendChild(a);
            nav.appendChild(document.createTextNode('   '));
        }
        if (nextOk) {
            const a = document.createElement('a');
            a.href = nodeFileName(meta.node + 1);
            a.textContent = 'next node ▶';
            nav.appendChild(a);
        }
        return nav;
    }

    private _tree(meta: BnbPayload): HTMLElement {
        const children = new Map<number, number[]>();
        for (const entry of meta.tree) {
            if (entry.parent !== null) {
                const siblings = children.get(entry.parent) ?? [];
                siblings.push(entry.id);
                children.set(entry.parent, siblings);
            }
        }
        const subtree = (id: number): HTMLLIElement => {
            const entry = meta.tree[id];
            const label = `node ${id} [${entry.status}${entry.value === null ? '' : `, ${entry.value}`}]`;
            const li = document.createElement('li');
            const here = document.createElement('span');
            here.textContent = label;
            if (id === meta.node) {
                here.className = 'lv-here';
            }
            li.appendChild(here);
            for (const kid of children.get(id) ?? []) {
                const ul = document.createElement('ul');
                ul.className = 'lv-tree';
                ul.appendChild(subtree(kid));
                li.appendChild(ul);
            }
            return li;
        };
        const rootList = document.createElement('ul');
        rootList.className = 'lv-tree';
        for (const entry of meta.tree) {
            if (entry.parent === null) {
                rootList.appendChild(subtree(entry.id));
            }
        }
        return rootList;
    }
}
