"""Dataset assembly and export.

Builds one vectorised graph per labelled example and writes either the
four-file TU plain-text layout ({name}_A.txt, {name}_graph_indicator.txt,
{name}_graph_labels.txt, {name}_node_attributes.txt) or a self-describing
JSON document.  Exports are byte-deterministic given identical inputs, and
both formats re-import losslessly (the loaders below are used by the
round-trip tests; the trainer package has its own TU reader).
"""
from __future__ import annotations

import concurrent.futures
import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from .errors import DatasetError
from .graphs import bottom_clause_graph
from .logic import Constant, DefiniteClause, Program, render_literal, render_term
from .modes import ModeDecl, TypeSystem, render_mode
from .saturation import BottomClause, SaturationConfig, saturate
from .vectorise import VectorisedGraph, Vocabulary, transform_graph

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class DatasetRow:
    example_id: str
    label: str
    graph: VectorisedGraph
    bottom: Optional[BottomClause]
    # bottom-graph sizes before the antecedent/ugraph transformation (Table-1 style stats)
    x_count: int = 0
    y_count: int = 0
    e_count: int = 0

    @property
    def empty(self) -> bool:
        return self.bottom is None

    @property
    def complete(self) -> bool:
        return self.bottom.complete if self.bottom else True


@dataclass
class GraphDataset:
    rows: list[DatasetRow]
    vocab: Vocabulary
    provenance: dict = field(default_factory=dict)

    @property
    def label_names(self) -> list[str]:
        """Distinct labels, alphabetical; their 1-based index is the TU label code."""
        return sorted({row.label for row in self.rows})

    def label_code(self, label: str) -> int:
        return self.label_names.index(label) + 1

    def stats(self) -> dict:
        n = len(self.rows)
        if n == 0:
            return {"examples": 0, "avg_x": 0.0, "avg_y": 0.0, "avg_e": 0.0}
        return {
            "examples": n,
            "avg_x": sum(r.x_count for r in self.rows) / n,
            "avg_y": sum(r.y_count for r in self.rows) / n,
            "avg_e": sum(r.e_count for r in self.rows) / n,
        }


def example_identity(example: DefiniteClause, index: int) -> tuple[str, Optional[str]]:
    """(example id, label or None).  class/2 heads carry their own label."""
    head = example.head
    if head.predicate == "class" and head.arity == 2:
        return render_term(head.args[0]), render_term(head.args[1])
    if head.arity >= 1 and isinstance(head.args[0], Constant):
        return render_term(head.args[0]), None
    return f"e{index}", None


def _build_row(program, modes, types, config, vocab, example, index, labels):
    example_id, own_label = example_identity(example, index)
    label = own_label if own_label is not None else (labels or {}).get(example_id)
    if label is None:
        raise DatasetError(f"no label for example {example_id!r}")
    try:
        bottom = saturate(program, modes, types, config, example)
        bot = bottom_clause_graph(bottom, types, modes, config.depth, config.sequence_cap)
        graph = transform_graph(bot, vocab)
    except DatasetError:
        raise
    except Exception as exc:
        raise DatasetError(
            f"example {example_id!r} ({example.location}): {exc}") from exc
    return DatasetRow(example_id, label, graph, bottom,
                      len(bot.x_labels), len(bot.y_labels),
                      len(bot.e_in) + len(bot.e_out))


def build_dataset(program: Program, modes: Sequence[ModeDecl], types: TypeSystem,
                  config: SaturationConfig, examples: Sequence[DefiniteClause],
                  labels: Optional[dict[str, str]] = None, jobs: int = 1,
                  provenance: Optional[dict] = None) -> GraphDataset:
    """One vectorised graph per example, in input order.

    Examples whose saturation is empty stay in the dataset with an empty
    graph (row alignment with the labels matters more than the hole).
    """
    vocab = Vocabulary.build(modes, types)
    if jobs > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(
                lambda pair: _build_row(program, modes, types, config, vocab,
                                        pair[1], pair[0], labels),
                enumerate(examples)))
    else:
        rows = [_build_row(program, modes, types, config, vocab, example, i, labels)
                for i, example in enumerate(examples)]
    meta = dict(provenance or {})
    meta.setdefault("depth", config.depth)
    meta.setdefault("sequence_cap", config.sequence_cap)
    meta.setdefault("budget", config.budget)
    meta["incomplete_examples"] = [r.example_id for r in rows if not r.complete]
    meta["empty_examples"] = [r.example_id for r in rows if r.empty]
    meta["capped_examples"] = [r.example_id for r in rows if not r.graph.exhaustive]
    return GraphDataset(rows, vocab, meta)


def file_hash(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _render_component(value: float) -> str:
    # shortest round-trip float text so the loader reproduces exact values
    return repr(float(value))


def export_tu(dataset: GraphDataset, directory: str | Path, name: str) -> list[Path]:
    """Write the four TU files; vertex ids are global and 1-based.

    Per graph the vertex order is x-vertices then y-vertices in insertion
    order; graphs follow dataset order.  An empty graph contributes no vertex
    lines but still one graph label.
    """
    if not dataset.rows:
        raise DatasetError("refusing to export an empty dataset")
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    a_lines: list[str] = []
    indicator: list[str] = []
    labels: list[str] = []
    attributes: list[str] = []
    base = 0
    for graph_number, row in enumerate(dataset.rows, start=1):
        graph = row.graph
        labels.append(str(dataset.label_code(row.label)))
        for vec in graph.features:
            indicator.append(str(graph_number))
            attributes.append(", ".join(_render_component(c) for c in vec))
        for i, j in sorted(graph.edges):
            a_lines.append(f"{base + i + 1}, {base + j + 1}")
        base += graph.n_vertices
    files = {
        f"{name}_A.txt": a_lines,
        f"{name}_graph_indicator.txt": indicator,
        f"{name}_graph_labels.txt": labels,
        f"{name}_node_attributes.txt": attributes,
    }
    written = []
    for filename, lines in files.items():
        path = directory / filename
        path.write_text("\n".join(lines) + ("\n" if lines else ""), encoding="ascii")
        written.append(path)
    return written


@dataclass
class LoadedGraph:
    features: list[tuple[float, ...]]
    edges: list[tuple[int, int]]  # 0-based, graph-local
    label_code: int


def load_tu(directory: str | Path, name: str) -> list[LoadedGraph]:
    """Re-import a TU export (used by the round-trip checks)."""
    directory = Path(directory)

    def lines(suffix):
        return directory.joinpath(f"{name}_{suffix}.txt").read_text().splitlines()

    label_codes = [int(s) for s in lines("graph_labels")]
    indicator = [int(s) for s in lines("graph_indicator")]
    attributes = [tuple(float(p) for p in s.split(",")) for s in lines("node_attributes")]
    if len(indicator) != len(attributes):
        raise DatasetError("graph_indicator and node_attributes disagree on vertex count")
    graphs = [LoadedGraph([], [], code) for code in label_codes]
    vertex_graph: list[int] = []
    local_index: list[int] = []
    for vertex, graph_number in enumerate(indicator):
        if not 1 <= graph_number <= len(graphs):
            raise DatasetError(f"graph indicator {graph_number} out of range")
        g = graphs[graph_number - 1]
        vertex_graph.append(graph_number - 1)
        local_index.append(len(g.features))
        g.features.append(attributes[vertex])
    for line in lines("A"):
        i_text, j_text = line.split(",")
        i, j = int(i_text) - 1, int(j_text) - 1
        if vertex_graph[i] != vertex_graph[j]:
            raise DatasetError(f"edge {i + 1},{j + 1} crosses graphs")
        graphs[vertex_graph[i]].edges.append((local_index[i], local_index[j]))
    return graphs


def _graph_to_json(row: DatasetRow) -> dict:
    graph = row.graph
    return {
        "id": row.example_id,
        "label": row.label,
        "empty": row.empty,
        "complete": row.complete,
        "exhaustive": graph.exhaustive,
        "x_vertices": [
            {"literal": render_literal(lam), "mode": render_mode(mode)}
            for lam, mode in graph.x_labels
        ],
        "y_vertices": [
            {"term": render_term(term), "type": type_name}
            for term, type_name in graph.y_labels
        ],
        "features": [list(vec) for vec in graph.features],
        "edges": sorted(graph.edges),
        "bottom_size": {"x": row.x_count, "y": row.y_count, "e": row.e_count},
    }


def export_json(dataset: GraphDataset, path: str | Path) -> Path:
    """Self-describing single-file export: vocab, symbolic labels, ψ′, edges, flags."""
    document = {
        "schema_version": SCHEMA_VERSION,
        "vocab": dataset.vocab.to_dict(),
        "label_names": dataset.label_names,
        "provenance": dataset.provenance,
        "stats": dataset.stats(),
        "graphs": [_graph_to_json(row) for row in dataset.rows],
    }
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(document, indent=1, sort_keys=True) + "\n", encoding="utf-8")
    return path


def load_json(path: str | Path) -> dict:
    document = json.loads(Path(path).read_text(encoding="utf-8"))
    if document.get("schema_version") != SCHEMA_VERSION:
        raise DatasetError(f"unsupported schema version {document.get('schema_version')!r}")
    return document
