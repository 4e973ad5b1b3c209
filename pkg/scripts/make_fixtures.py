#!/usr/bin/env python3
"""Export scene JSON fixtures for the web UI's test suite.

The frontend never computes LP data itself — it consumes scene documents.
This script freezes a representative set of them (plain walk, auxiliary
phase, degenerate step, 3-D orbit case, clipped unbounded strip, and a full
branch-and-bound node sequence) as pretty-stable canonical JSON files.

Usage::

    python3 scripts/make_fixtures.py --out frontend/fixtures/
"""

import argparse
import json
import sys
from pathlib import Path

from lpviz.bnb import branch_and_bound
from lpviz.examples import example
from lpviz.model import lp_new
from lpviz.scene import SceneOptions, build_bnb_scenes, build_scene, serialize_scene
from lpviz.simplex import simplex_solve


def simplex_fixtures():
    for name, options in (
        ("lego_2d", SceneOptions()),
        ("phase1_needed_2d", SceneOptions()),
        ("degenerate_2d", SceneOptions(form="tableau")),
        ("klee_minty_3d", SceneOptions(objective_ticks=5)),
        ("dodecahedron_3d", SceneOptions()),
        ("unbounded_2d", SceneOptions(clip_box=((0, 0), (6, 6)))),
    ):
        entry = example(name)
        trace = simplex_solve(entry.lp, entry.expected_rule)
        yield name, build_scene(entry.lp, trace, options)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="frontend/fixtures", help="output directory")
    args = parser.parse_args(argv)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    manifest = {"simplex": [], "bnb": []}
    for name, doc in simplex_fixtures():
        path = out / f"{name}.json"
        path.write_bytes(serialize_scene(doc))
        manifest["simplex"].append(path.name)
        print(f"wrote {path}")

    lp = lp_new([[6, 4], [1, 2]], [24, 6], [5, 4])
    for doc in build_bnb_scenes(branch_and_bound(lp)):
        path = out / f"bnb_node_{doc.bnb['node']:03d}.json"
        path.write_bytes(serialize_scene(doc))
        manifest["bnb"].append(path.name)
        print(f"wrote {path}")

    manifest_path = out / "manifest.json"
    manifest_path.write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {manifest_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
