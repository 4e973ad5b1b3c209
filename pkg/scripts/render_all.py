#!/usr/bin/env python3
"""Render every built-in example to offline HTML in one go.

Writes one page per 2-D/3-D catalog entry, a clipped variant for the
unbounded strip, and a full branch-and-bound node set, then prints a small
manifest. Handy as a smoke check and for regenerating demo pages.

Usage::

    python3 scripts/render_all.py --out rendered/
"""

import argparse
import sys
from pathlib import Path

from lpviz.bnb import branch_and_bound
from lpviz.examples import example, example_names
from lpviz.model import lp_new
from lpviz.scene import (
    SceneOptions,
    bnb_index_html,
    build_bnb_scenes,
    build_scene,
    write_html,
)
from lpviz.simplex import simplex_solve


def render_catalog(out: Path) -> list[Path]:
    written = []
    for name in example_names():
        entry = example(name)
        if entry.lp.n not in (2, 3):
            print(f"  skip {name}: {entry.lp.n} variables cannot be drawn")
            continue
        trace = simplex_solve(entry.lp, entry.expected_rule)
        options = SceneOptions()
        if name == "unbounded_2d":
            options = SceneOptions(clip_box=((0, 0), (6, 6)))
        doc = build_scene(entry.lp, trace, options)
        path = out / f"{name}.html"
        path.write_text(write_html(doc), encoding="utf-8")
        written.append(path)
    return written


def render_tree(out: Path) -> list[Path]:
    lp = lp_new([[6, 4], [1, 2]], [24, 6], [5, 4])
    docs = build_bnb_scenes(branch_and_bound(lp))
    tree_dir = out / "bnb_two_var"
    tree_dir.mkdir(parents=True, exist_ok=True)
    names = [f"node_{i:03d}.html" for i in range(len(docs))]
    written = []
    for doc, name in zip(docs, names):
        path = tree_dir / name
        path.write_text(write_html(doc), encoding="utf-8")
        written.append(path)
    index = tree_dir / "index.html"
    index.write_text(bnb_index_html(docs, names), encoding="utf-8")
    written.append(index)
    return written


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="rendered", help="output directory")
    args = parser.parse_args(argv)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    written = render_catalog(out) + render_tree(out)
    total = sum(p.stat().st_size for p in written)
    print(f"wrote {len(written)} pages ({total / 1024:.0f} KiB) under {out}/")
    return 0


if __name__ == "__main__":
    sys.exit(main())
