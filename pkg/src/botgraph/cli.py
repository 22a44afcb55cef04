"""Command-line driver.

Subcommands:
    saturate   print bottom clauses and their witness sequences
    graph      print clause-graph debug dumps
    dataset    build a labelled graph dataset and export it (tu or json)
    prop       propositionalise bottom clauses (bcp or drm) to CSV
    check      mode-language membership verdicts for a clause file
    explain    extract and verify an explanation subgraph for a hypothesis

Exit codes: 0 success, 1 usage error, 2 input parse/type error,
3 budget-incomplete results under --strict.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import __version__
from .dataset import build_dataset, export_json, export_tu, file_hash
from .errors import BotgraphError, ParseError
from .graphs import bottom_clause_graph, cg_leq, explanation_subgraph, graph_to_clause
from .logic import clause_equal, is_ground, render_clause, render_literal
from .modes import TypeSystem, declared_type_names, render_mode
from .parser import parse_clause, parse_labels, parse_modes, parse_program
from .propositional import propositionalise_bcp, propositionalise_drm
from .saturation import SaturationConfig, saturate
from .sequences import in_mode_language

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_INCOMPLETE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _common_flags(sub, labels=False):
    sub.add_argument("--bk", required=True, help="background knowledge file")
    sub.add_argument("--modes", required=True, help="mode declaration file")
    sub.add_argument("--examples", required=True, help="example clause file")
    if labels:
        sub.add_argument("--labels", help="id,label file (needed unless heads are class/2)")
    sub.add_argument("--depth", type=int, default=2, help="depth limit d (default 2)")
    sub.add_argument("--cap", type=int, default=256,
                     help="λμ-sequence enumeration cap (default 256)")
    sub.add_argument("--budget", type=int, default=200_000,
                     help="resolution step budget per saturation (default 200000)")
    sub.add_argument("--seed", type=int, default=0,
                     help="reserved; recorded in provenance, affects nothing semantic")
    sub.add_argument("--jobs", type=int, default=1, help="parallel saturations (default 1)")
    sub.add_argument("--strict", action="store_true",
                     help="exit 3 when any saturation was budget-incomplete")
    sub.add_argument("--out", help="output file or directory (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="botgraph", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"botgraph {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    sat = subs.add_parser("saturate", help="emit bottom clauses and witnesses")
    _common_flags(sat)

    graph = subs.add_parser("graph", help="emit clause-graph debug dumps")
    _common_flags(graph)

    data = subs.add_parser("dataset", help="build and export a graph dataset")
    _common_flags(data, labels=True)
    data.add_argument("--format", choices=("tu", "json"), default="tu")
    data.add_argument("--name", default="dataset", help="TU file prefix (default 'dataset')")

    prop = subs.add_parser("prop", help="propositionalise bottom clauses")
    _common_flags(prop, labels=True)
    prop.add_argument("--method", choices=("bcp", "drm"), required=True)
    prop.add_argument("--refine-constants", action="store_true",
                      help="drm only: split relations by their # constants")

    check = subs.add_parser("check", help="mode-language membership verdicts")
    _common_flags(check)

    explain = subs.add_parser("explain", help="explanation subgraph for a hypothesis")
    _common_flags(explain)
    explain.add_argument("--hypothesis", required=True,
                         help="file with one ground hypothesis clause")
    return parser


def _load_inputs(args):
    program = parse_program(Path(args.bk).read_text(), source=args.bk)
    modes = parse_modes(Path(args.modes).read_text(), source=args.modes)
    examples_program = parse_program(Path(args.examples).read_text(), source=args.examples)
    for clause in examples_program.clauses:
        if not is_ground(clause.head) or not all(is_ground(b) for b in clause.body):
            raise ParseError("example clauses must be ground",
                             args.examples, 0, 0)
    types = TypeSystem.from_program(program, declared_type_names(modes))
    config = SaturationConfig(depth=args.depth, budget=args.budget, sequence_cap=args.cap)
    return program, modes, types, config, examples_program.clauses


def _emit(args, text: str):
    if args.out:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _saturate_all(program, modes, types, config, examples):
    return [saturate(program, modes, types, config, e) for e in examples]


def cmd_saturate(args) -> int:
    program, modes, types, config, examples = _load_inputs(args)
    bottoms = _saturate_all(program, modes, types, config, examples)
    lines = []
    incomplete = False
    for example, bottom in zip(examples, bottoms):
        if bottom is None:
            lines.append(f"% no head mode matches {render_literal(example.head)}")
            continue
        incomplete |= not bottom.complete
        lines.append(render_clause(bottom.clause))
        witness = ", ".join(f"({render_literal(l)},{render_mode(m)})" for l, m in bottom.witness)
        lines.append(f"% witness: <{witness}>")
        if not bottom.complete:
            lines.append("% warning: budget hit, bottom clause may be incomplete")
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_INCOMPLETE if args.strict and incomplete else EXIT_OK


def cmd_graph(args) -> int:
    program, modes, types, config, examples = _load_inputs(args)
    chunks = []
    incomplete = False
    for example in examples:
        bottom = saturate(program, modes, types, config, example)
        if bottom is not None:
            incomplete |= not bottom.complete
        graph = bottom_clause_graph(bottom, types, modes, config.depth, config.sequence_cap)
        chunks.append(f"% bottom-graph of {render_literal(example.head)}\n{graph.dump()}")
    _emit(args, "\n".join(chunks))
    return EXIT_INCOMPLETE if args.strict and incomplete else EXIT_OK


def _labels_map(args):
    if getattr(args, "labels", None):
        return parse_labels(Path(args.labels).read_text())
    return None


def cmd_dataset(args) -> int:
    program, modes, types, config, examples = _load_inputs(args)
    provenance = {
        "bk_sha256": file_hash(args.bk),
        "modes_sha256": file_hash(args.modes),
        "seed": args.seed,
    }
    ds = build_dataset(program, modes, types, config, examples,
                       labels=_labels_map(args), jobs=args.jobs, provenance=provenance)
    out = Path(args.out or ".")
    if args.format == "tu":
        written = export_tu(ds, out, args.name)
        for path in written:
            print(path)
    else:
        path = export_json(ds, out / f"{args.name}.json" if out.is_dir() or not out.suffix
                           else out)
        print(path)
    stats = ds.stats()
    print(f"graphs={stats['examples']} avg|X|={stats['avg_x']:.2f} "
          f"avg|Y|={stats['avg_y']:.2f} avg|E|={stats['avg_e']:.2f}")
    print("labels: " + " ".join(f"{name}={ds.label_code(name)}"
                                for name in ds.label_names))
    if ds.provenance["incomplete_examples"] and args.strict:
        return EXIT_INCOMPLETE
    return EXIT_OK


def cmd_prop(args) -> int:
    program, modes, types, config, examples = _load_inputs(args)
    labels_map = _labels_map(args) or {}
    bottoms, labels, ids = [], [], []
    from .dataset import example_identity

    for i, example in enumerate(examples):
        example_id, own = example_identity(example, i)
        label = own if own is not None else labels_map.get(example_id)
        if label is None:
            raise ParseError(f"no label for example {example_id!r}", args.examples, 0, 0)
        bottoms.append(saturate(program, modes, types, config, example))
        labels.append(label)
        ids.append(example_id)
    if args.method == "bcp":
        matrix = propositionalise_bcp(bottoms, labels, ids)
    else:
        matrix = propositionalise_drm(bottoms, labels, ids,
                                      refine_by_constants=args.refine_constants)
    _emit(args, matrix.to_csv())
    incomplete = any(b is not None and not b.complete for b in bottoms)
    return EXIT_INCOMPLETE if args.strict and incomplete else EXIT_OK


def cmd_check(args) -> int:
    program, modes, types, config, examples = _load_inputs(args)
    lines = []
    for clause in examples:
        verdict = in_mode_language(clause, types, modes, config.depth)
        status = "in language" if verdict else "not in language"
        lines.append(f"{status}: {render_clause(clause)}")
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_explain(args) -> int:
    program, modes, types, config, examples = _load_inputs(args)
    hypothesis = parse_clause(Path(args.hypothesis).read_text(), source=args.hypothesis)
    lines = []
    for example in examples:
        bottom = saturate(program, modes, types, config, example)
        graph = bottom_clause_graph(bottom, types, modes, config.depth, config.sequence_cap)
        sub = explanation_subgraph(graph, hypothesis)
        lines.append(f"% explanation subgraph for {render_literal(example.head)}")
        lines.append(sub.dump())
        ok_leq = cg_leq(sub, graph)
        ok_back = clause_equal(graph_to_clause(sub), hypothesis)
        lines.append(f"% subgraph <=cg bottom-graph: {ok_leq}")
        lines.append(f"% graph_to_clause(subgraph) == hypothesis: {ok_back}")
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


_COMMANDS = {
    "saturate": cmd_saturate,
    "graph": cmd_graph,
    "dataset": cmd_dataset,
    "prop": cmd_prop,
    "check": cmd_check,
    "explain": cmd_explain,
}


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except (ParseError,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BotgraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
