"""Command-line entry point: solve, render, branch-and-bound, examples.

The typical classroom flow is one line::

    lpviz render --example lego_2d -o lego.html

which writes a single offline HTML file. LPs come from a JSON file, from the
built-in example catalog (``--example``), or inline for slides
(``--lp 'A=[[2,2],[2,1]];b=[8,6];c=[16,10]'``).

Exit codes: 0 on success, 1 on user error (bad input, bad flags — message
only, never a stack trace), 2 on an internal failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import traceback
from pathlib import Path
from typing import Optional, Sequence

from .bnb import branch_and_bound
from .errors import LpvizError
from .examples import example, example_names
from .model import LinearProgram, load_lp, lp_new
from .scene import (
    SceneOptions,
    bnb_index_html,
    build_bnb_scenes,
    build_scene,
    serialize_trace,
    write_html,
)
from .simplex import PivotRule, SolveStatus, format_dictionary, format_tableau, simplex_solve

_RULES = [rule.value for rule in PivotRule]
_FORMS = ["dictionary", "tableau"]


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; user errors must exit 1."""

    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_input_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("file", nargs="?", help="LP as a JSON file with keys A, b, c")
    sub.add_argument("--example", metavar="NAME", help="use a catalog example")
    sub.add_argument(
        "--lp",
        metavar="SPEC",
        help="inline LP, e.g. 'A=[[2,2],[2,1]];b=[8,6];c=[16,10]'",
    )


def _add_option_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--rule", choices=_RULES, default="dantzig", help="pivot rule")
    sub.add_argument("--form", choices=_FORMS, default="dictionary", help="algebra display form")
    sub.add_argument(
        "--basic-sol",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="hover shows all n+m values (default) or just the n decision values",
    )
    sub.add_argument(
        "--show-basis",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="hover includes the bases at each vertex",
    )
    sub.add_argument("--ticks", type=int, default=10, help="objective slider tick count")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lpviz", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="command", required=True)

    solve = subs.add_parser("solve", help="print the simplex trace as text")
    _add_input_args(solve)
    solve.add_argument("--rule", choices=_RULES, default="dantzig", help="pivot rule")
    solve.add_argument("--form", choices=_FORMS, default="dictionary", help="algebra display form")
    solve.add_argument("--json", action="store_true", help="print the trace as JSON instead")

    render = subs.add_parser("render", help="write a self-contained HTML visualization")
    _add_input_args(render)
    _add_option_args(render)
    render.add_argument("-o", "--output", default="scene.html", metavar="PATH")

    bnb = subs.add_parser("bnb", help="write one HTML page per branch-and-bound node")
    _add_input_args(bnb)
    _add_option_args(bnb)
    bnb.add_argument("-o", "--output", default="bnb_nodes", metavar="DIR")
    bnb.add_argument("--node-limit", type=int, default=1000, metavar="N")

    subs.add_parser("examples", help="list the example catalog")
    return parser


def _parse_inline(spec: str) -> LinearProgram:
    parts: dict[str, object] = {}
    for chunk in spec.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        key, sep, value = chunk.partition("=")
        key = key.strip()
        if not sep or key not in ("A", "b", "c"):
            raise LpvizError(
                f"inline LP pieces look like 'A=[[...]]', 'b=[...]', 'c=[...]'; got {chunk!r}"
            )
        try:
            parts[key] = json.loads(value, parse_float=str)
        except json.JSONDecodeError as exc:
            raise LpvizError(f"inline LP value for {key} is not valid JSON: {exc}") from None
    missing = [key for key in ("A", "b", "c") if key not in parts]
    if missing:
        raise LpvizError(f"inline LP is missing {', '.join(missing)}")
    return lp_new(parts["A"], parts["b"], parts["c"])


def _load_input(args) -> LinearProgram:
    sources = [s for s in (args.file, args.example, args.lp) if s]
    if len(sources) != 1:
        raise LpvizError("provide exactly one of: a file path, --example, or --lp")
    if args.example:
        return example(args.example).lp
    if args.lp:
        return _parse_inline(args.lp)
    return load_lp(args.file)


def _options(args) -> SceneOptions:
    return SceneOptions(
        form=args.form,
        basic_sol=args.basic_sol,
        show_basis=args.show_basis,
        objective_ticks=args.ticks,
    )


def _cmd_solve(args) -> int:
    lp = _load_input(args)
    trace = simplex_solve(lp, PivotRule(args.rule))
    if args.json:
        sys.stdout.buffer.write(serialize_trace(lp, trace))
        sys.stdout.write("\n")
        return 0

    names = list(lp.variable_names) + ["x0"]
    index = 0
    for phase, iterations in ((1, trace.phase1 or ()), (2, trace.phase2)):
        for it in iterations:
            print(f"--- iteration {index} (phase {phase}) ---")
            lines = (
                format_tableau(it.tableau, names)
                if args.form == "tableau"
                else format_dictionary(it.dictionary, names)
            )
            for line in lines:
                print(line)
            bits = []
            if it.entering is not None:
                bits.append(f"entering {names[it.entering]}")
            if it.leaving is not None:
                bits.append(f"leaving {names[it.leaving]}")
            if it.degenerate_step:
                bits.append("degenerate")
            if bits:
                print("pivot: " + ", ".join(bits))
            print()
            index += 1

    print(f"status: {trace.status.value}")
    if trace.status is SolveStatus.OPTIMAL:
        print(f"optimal value: {trace.optimal_value}")
        solution = trace.optimal_solution
        pairs = ", ".join(
            f"{lp.variable_names[j]} = {solution[j]}" for j in range(lp.n)
        )
        print(f"solution: {pairs}")
    corners = {it.basic_solution[: lp.n] for it in trace.phase2}
    print(f"distinct corner points visited: {len(corners)}")
    return 0


def _cmd_render(args) -> int:
    lp = _load_input(args)
    trace = simplex_solve(lp, PivotRule(args.rule))
    doc = build_scene(lp, trace, _options(args))
    html = write_html(doc)
    Path(args.output).write_text(html, encoding="utf-8")
    print(f"wrote {args.output}")
    return 0


def _cmd_bnb(args) -> int:
    lp = _load_input(args)
    trace = branch_and_bound(lp, pivot_rule=args.rule, node_limit=args.node_limit)
    docs = build_bnb_scenes(trace, _options(args))
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)
    filenames = [f"node_{i:03d}.html" for i in range(len(docs))]
    for doc, filename in zip(docs, filenames):
        (outdir / filename).write_text(write_html(doc), encoding="utf-8")
    (outdir / "index.html").write_text(bnb_index_html(docs, filenames), encoding="utf-8")
    print(f"wrote {len(docs)} node pages and index.html to {outdir}")
    return 0


def _cmd_examples(args) -> int:
    width = max(len(name) for name in example_names())
    for name in example_names():
        print(f"{name:<{width}}  {example(name).notes}")
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "solve": _cmd_solve,
        "render": _cmd_render,
        "bnb": _cmd_bnb,
        "examples": _cmd_examples,
    }
    try:
        return handlers[args.command](args)
    except (LpvizError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception:  # pragma: no cover - internal invariant failure
        traceback.print_exc()
        return 2


if __name__ == "__main__":
    sys.exit(main())
