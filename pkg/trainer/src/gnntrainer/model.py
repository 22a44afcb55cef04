"""The conv-pool x3 + hierarchical readout + MLP graph classifier."""
from __future__ import annotations

from dataclasses import dataclass

import torch
from torch import nn

from .layers import MLPHead, SAGPool, VARIANT_NAMES, make_conv, readout
from .tudata import TUGraph


@dataclass(frozen=True)
class ModelSpec:
    variant: int = 1        # 1 GCN, 2 k-GNN, 3 GAT, 4 GraphSAGE, 5 ARMA
    m: int = 8              # vertex embedding width; readout width is 2m
    pooling_ratio: float = 0.5
    dropout: float = 0.5
    # the minimal settings recorded in the metrics document
    gat_heads: int = 1
    arma_stacks: int = 1
    arma_depth: int = 1

    @property
    def variant_name(self) -> str:
        return VARIANT_NAMES[self.variant]


class GraphClassifier(nn.Module):
    """Three interleaved conv-pool blocks; block readouts are summed, then an MLP."""

    BLOCKS = 3

    def __init__(self, spec: ModelSpec, in_width: int, n_classes: int):
        super().__init__()
        self.spec = spec
        self.in_width = in_width
        self.n_classes = n_classes
        widths = [in_width, spec.m, spec.m]
        self.convs = nn.ModuleList(
            [make_conv(spec.variant, w, spec.m, gat_heads=spec.gat_heads,
                       arma_stacks=spec.arma_stacks, arma_depth=spec.arma_depth)
             for w in widths])
        self.pools = nn.ModuleList(
            [SAGPool(spec.m, spec.pooling_ratio) for _ in range(self.BLOCKS)])
        self.head = MLPHead(spec.m, n_classes, spec.dropout)

    def embed_graph(self, features: torch.Tensor, adjacency: torch.Tensor) -> torch.Tensor:
        """Fixed-length (2m) representation of one graph."""
        h, adj = features, adjacency
        total = None
        for conv, pool in zip(self.convs, self.pools):
            h = conv(h, adj)
            h, adj = pool(h, adj)
            block = readout(h, self.spec.m)
            total = block if total is None else total + block
        return total

    def forward(self, graphs: list[TUGraph]) -> torch.Tensor:
        """Log-probabilities, one row per graph."""
        embeddings = torch.stack(
            [self.embed_graph(g.features, g.adjacency) for g in graphs])
        return self.head(embeddings)


def save_checkpoint(model: GraphClassifier, path):
    torch.save({
        "spec": model.spec.__dict__,
        "in_width": model.in_width,
        "n_classes": model.n_classes,
        "state": model.state_dict(),
    }, path)


def load_checkpoint(path) -> GraphClassifier:
    blob = torch.load(path, weights_only=False)
    model = GraphClassifier(ModelSpec(**blob["spec"]), blob["in_width"], blob["n_classes"])
    model.load_state_dict(blob["state"])
    model.eval()
    return model
