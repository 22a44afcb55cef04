"""Loader for the four-file TU plain-text graph dataset layout.

Expected files (written by the companion dataset builder):
    {name}_A.txt               one arc per line, "i, j", global 1-based ids
    {name}_graph_indicator.txt graph number per vertex, 1-based
    {name}_graph_labels.txt    one integer class label per graph
    {name}_node_attributes.txt comma-separated feature vector per vertex

Graphs may be empty (a label with no vertices); attribute width must be
constant across the file.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np
import torch


class TUFormatError(ValueError):
    pass


@dataclass
class TUGraph:
    """One graph: dense feature matrix, dense adjacency, integer label."""

    features: torch.Tensor  # (N, F) float
    adjacency: torch.Tensor  # (N, N) float, 0/1, no self-loops implied
    label: int

    @property
    def n_vertices(self) -> int:
        return self.features.shape[0]

    def permuted(self, order) -> "TUGraph":
        """The same graph with vertices reordered (for invariance checks)."""
        idx = torch.as_tensor(order, dtype=torch.long)
        return TUGraph(self.features[idx], self.adjacency[idx][:, idx], self.label)


def load_tu(directory: str | Path, name: str, dtype=torch.float32) -> list[TUGraph]:
    directory = Path(directory)

    def lines(suffix):
        path = directory / f"{name}_{suffix}.txt"
        if not path.exists():
            raise TUFormatError(f"missing TU file {path}")
        return path.read_text().splitlines()

    labels = [int(s) for s in lines("graph_labels")]
    indicator = [int(s) for s in lines("graph_indicator")]
    raw_attrs = [np.array([float(p) for p in s.split(",")]) for s in lines("node_attributes")]
    if len(indicator) != len(raw_attrs):
        raise TUFormatError("graph_indicator and node_attributes disagree on vertex count")
    widths = {a.shape[0] for a in raw_attrs}
    if len(widths) > 1:
        raise TUFormatError(f"inconsistent attribute widths {sorted(widths)}")
    width = widths.pop() if widths else 0

    counts = [0] * len(labels)
    graph_of: list[int] = []
    local: list[int] = []
    for g in indicator:
        if not 1 <= g <= len(labels):
            raise TUFormatError(f"graph indicator {g} out of range")
        graph_of.append(g - 1)
        local.append(counts[g - 1])
        counts[g - 1] += 1

    features = [np.zeros((c, width)) for c in counts]
    adjacency = [np.zeros((c, c)) for c in counts]
    for vertex, attr in enumerate(raw_attrs):
        features[graph_of[vertex]][local[vertex]] = attr
    for line in lines("A"):
        parts = line.split(",")
        if len(parts) != 2:
            raise TUFormatError(f"malformed edge line {line!r}")
        i, j = int(parts[0]) - 1, int(parts[1]) - 1
        if not (0 <= i < len(graph_of) and 0 <= j < len(graph_of)):
            raise TUFormatError(f"edge endpoint out of range in {line!r}")
        if graph_of[i] != graph_of[j]:
            raise TUFormatError(f"edge {line!r} crosses graphs")
        adjacency[graph_of[i]][local[i], local[j]] = 1.0

    return [
        TUGraph(torch.as_tensor(f, dtype=dtype), torch.as_tensor(a, dtype=dtype), lab)
        for f, a, lab in zip(features, adjacency, labels)
    ]


def feature_width(graphs: list[TUGraph]) -> int:
    for graph in graphs:
        if graph.n_vertices:
            return graph.features.shape[1]
    raise TUFormatError("cannot infer feature width from an all-empty dataset")


def class_count(graphs: list[TUGraph]) -> int:
    return max(g.label for g in graphs)


@dataclass
class FeatureStats:
    """Per-dimension vertex-feature statistics, fitted on a training set."""

    mean: torch.Tensor
    std: torch.Tensor

    def apply(self, graphs: list[TUGraph]) -> list[TUGraph]:
        out = []
        for g in graphs:
            if g.n_vertices:
                scaled = (g.features - self.mean.to(g.features.dtype)) \
                    / self.std.to(g.features.dtype)
            else:
                scaled = g.features
            out.append(TUGraph(scaled, g.adjacency, g.label))
        return out


def standardise_features(train_graphs: list[TUGraph],
                         eps: float = 1e-6) -> tuple[list[TUGraph], FeatureStats]:
    """Zero-mean unit-variance preprocessing over the training vertices.

    Sparse one-hot blocks come out of the exporter at raw 0/1 scale, which
    shrinks to nothing through stacked score-gated pooling; standardisation
    puts every dimension at unit scale (rare, informative coordinates get the
    largest magnitudes).  Apply the returned stats to held-out graphs so train
    and test representations stay aligned.  Constant dimensions pass through
    centred but unscaled.
    """
    rows = torch.cat([g.features for g in train_graphs if g.n_vertices], dim=0)
    mean = rows.mean(dim=0)
    std = rows.std(dim=0, unbiased=False)
    std = torch.where(std > eps, std, torch.ones_like(std))
    stats = FeatureStats(mean, std)
    return stats.apply(train_graphs), stats
