"""Graph layers: five convolution variants, self-attention pooling, readout, head.

All layers take a dense vertex-feature matrix H (N x F) and a dense symmetric
0/1 adjacency A (N x N, no self-loops) and work on a single graph; batching
happens one graph at a time at desk scale.  Parameter matrices carry no bias
terms, matching the propagation rules being implemented.

Variants:
  1 GCN        H' = relu(D~^{-1/2} A~ D~^{-1/2} H W),  A~ = A + I
  2 k-GNN      h'_u = relu(h_u W1 + sum_{v in N(u)} h_v W2)
  3 GAT        h'_u = relu(sum_{v in N(u) u {u}} a_uv W h_v), one attention head,
               a_uv = softmax_v(leaky_relu(att . [W h_u || W h_v]))
  4 GraphSAGE  h'_u = relu(h_u W1 + mean_{v in N(u)} h_v W2), full neighbourhood
  5 ARMA       H' = relu(L^ H W + H V), one stack of depth one, L^ = D^{-1/2} A D^{-1/2}
"""
from __future__ import annotations

import math

import torch
from torch import nn

VARIANT_NAMES = {1: "gcn", 2: "kgnn", 3: "gat", 4: "sage", 5: "arma"}


def normalised_adjacency(adj: torch.Tensor, add_self_loops: bool = True) -> torch.Tensor:
    """D^{-1/2} (A [+ I]) D^{-1/2}; zero-degree vertices propagate nothing."""
    n = adj.shape[0]
    if n == 0:
        return adj
    a = adj + torch.eye(n, dtype=adj.dtype, device=adj.device) if add_self_loops else adj
    degree = a.sum(dim=1)
    inv_sqrt = torch.where(degree > 0, degree.pow(-0.5), torch.zeros_like(degree))
    return inv_sqrt.unsqueeze(1) * a * inv_sqrt.unsqueeze(0)


class GCNConv(nn.Module):
    def __init__(self, in_width: int, out_width: int):
        super().__init__()
        self.weight = nn.Linear(in_width, out_width, bias=False)

    def forward(self, h, adj):
        return torch.relu(normalised_adjacency(adj) @ self.weight(h))


class KGNNConv(nn.Module):
    def __init__(self, in_width: int, out_width: int):
        super().__init__()
        self.weight_self = nn.Linear(in_width, out_width, bias=False)
        self.weight_neigh = nn.Linear(in_width, out_width, bias=False)

    def forward(self, h, adj):
        return torch.relu(self.weight_self(h) + adj @ self.weight_neigh(h))


class GATHead(nn.Module):
    negative_slope = 0.2

    def __init__(self, in_width: int, out_width: int):
        super().__init__()
        self.weight = nn.Linear(in_width, out_width, bias=False)
        self.att_self = nn.Parameter(torch.empty(out_width))
        self.att_neigh = nn.Parameter(torch.empty(out_width))
        bound = 1.0 / math.sqrt(out_width)
        nn.init.uniform_(self.att_self, -bound, bound)
        nn.init.uniform_(self.att_neigh, -bound, bound)

    def attention(self, h, adj):
        """Row-stochastic attention over each vertex's neighbourhood plus itself."""
        n = h.shape[0]
        if n == 0:
            return adj
        w = self.weight(h)
        scores = torch.nn.functional.leaky_relu(
            (w @ self.att_self).unsqueeze(1) + (w @ self.att_neigh).unsqueeze(0),
            negative_slope=self.negative_slope)
        mask = (adj + torch.eye(n, dtype=adj.dtype, device=adj.device)) > 0
        scores = scores.masked_fill(~mask, float("-inf"))
        return torch.softmax(scores, dim=1)

    def forward(self, h, adj):
        return self.attention(h, adj) @ self.weight(h)


class GATConv(nn.Module):
    """Attention aggregation; multiple heads are averaged (one head by default)."""

    def __init__(self, in_width: int, out_width: int, heads: int = 1):
        super().__init__()
        if heads < 1:
            raise ValueError("at least one attention head required")
        self.heads = nn.ModuleList(GATHead(in_width, out_width) for _ in range(heads))

    def attention(self, h, adj):
        return self.heads[0].attention(h, adj)

    def forward(self, h, adj):
        if h.shape[0] == 0:
            return self.heads[0].weight(h)
        mixed = sum(head(h, adj) for head in self.heads) / len(self.heads)
        return torch.relu(mixed)


class SAGEConv(nn.Module):
    def __init__(self, in_width: int, out_width: int):
        super().__init__()
        self.weight_self = nn.Linear(in_width, out_width, bias=False)
        self.weight_neigh = nn.Linear(in_width, out_width, bias=False)

    def forward(self, h, adj):
        degree = adj.sum(dim=1, keepdim=True).clamp(min=1.0)
        mean_neigh = (adj @ h) / degree
        return torch.relu(self.weight_self(h) + self.weight_neigh(mean_neigh))


class ARMAStack(nn.Module):
    """One auto-regressive stack: depth iterations of propagate-plus-skip."""

    def __init__(self, in_width: int, out_width: int, depth: int):
        super().__init__()
        self.props = nn.ModuleList(
            nn.Linear(out_width if k else in_width, out_width, bias=False)
            for k in range(depth))
        self.skips = nn.ModuleList(
            nn.Linear(in_width, out_width, bias=False) for _ in range(depth))

    def forward(self, h0, laplacian_hat):
        h = h0
        for prop, skip in zip(self.props, self.skips):
            h = torch.relu(laplacian_hat @ prop(h) + skip(h0))
        return h


class ARMAConv(nn.Module):
    """Parallel stacks averaged; defaults to a single stack of depth one."""

    def __init__(self, in_width: int, out_width: int, stacks: int = 1, depth: int = 1):
        super().__init__()
        if stacks < 1 or depth < 1:
            raise ValueError("ARMA needs at least one stack of depth one")
        self.stacks = nn.ModuleList(
            ARMAStack(in_width, out_width, depth) for _ in range(stacks))

    def forward(self, h, adj):
        laplacian_hat = normalised_adjacency(adj, add_self_loops=False)
        return sum(stack(h, laplacian_hat) for stack in self.stacks) / len(self.stacks)


_CONVS = {1: GCNConv, 2: KGNNConv, 3: GATConv, 4: SAGEConv, 5: ARMAConv}


def make_conv(variant: int, in_width: int, out_width: int, *,
              gat_heads: int = 1, arma_stacks: int = 1, arma_depth: int = 1) -> nn.Module:
    if variant not in _CONVS:
        raise ValueError(f"unknown convolution variant {variant} (expected 1..5)")
    if variant == 3:
        return GATConv(in_width, out_width, heads=gat_heads)
    if variant == 5:
        return ARMAConv(in_width, out_width, stacks=arma_stacks, depth=arma_depth)
    return _CONVS[variant](in_width, out_width)


class SAGPool(nn.Module):
    """Self-attention pooling: keep the top ceil(ratio*N) vertices per graph.

    Scores come from the GCN propagation rule with a single-column parameter;
    kept features are gated by their raw score.  Vertices whose score ties the
    boundary value are all kept (scores are compared after rounding away
    float-reordering noise), so the selected set is a function of the score
    multiset alone and vertex relabelling cannot change the result.  The
    survivors keep their original relative order.
    """

    TIE_RESOLUTION = 1e-9  # scores closer than this count as tied

    def __init__(self, width: int, ratio: float = 0.5):
        super().__init__()
        if not 0.0 < ratio <= 1.0:
            raise ValueError("pooling ratio must be in (0, 1]")
        self.ratio = ratio
        self.att = nn.Linear(width, 1, bias=False)

    def scores(self, h, adj):
        return torch.tanh(normalised_adjacency(adj) @ self.att(h)).squeeze(1)

    def forward(self, h, adj):
        n = h.shape[0]
        if n == 0:
            return h, adj
        z = self.scores(h, adj)
        keep = math.ceil(self.ratio * n)
        rounded = torch.round(z / self.TIE_RESOLUTION) * self.TIE_RESOLUTION
        threshold = torch.sort(rounded, descending=True).values[keep - 1]
        idx = (rounded >= threshold).nonzero(as_tuple=True)[0]
        return h[idx] * z[idx].unsqueeze(1), adj[idx][:, idx]


def readout(h: torch.Tensor, width: int) -> torch.Tensor:
    """Global average pool concatenated with global max pool (length 2*width)."""
    if h.shape[0] == 0:
        return torch.zeros(2 * width, dtype=h.dtype, device=h.device)
    return torch.cat([h.mean(dim=0), h.max(dim=0).values])


class MLPHead(nn.Module):
    """2m -> m -> floor(m/2) -> classes, relu hidden, log-softmax out,
    dropout 0.5 after the first layer."""

    def __init__(self, m: int, n_classes: int, dropout: float = 0.5):
        super().__init__()
        self.fc1 = nn.Linear(2 * m, m)
        self.dropout = nn.Dropout(dropout)
        self.fc2 = nn.Linear(m, m // 2)
        self.fc3 = nn.Linear(m // 2, n_classes)

    def forward(self, h):
        h = self.dropout(torch.relu(self.fc1(h)))
        h = torch.relu(self.fc2(h))
        return torch.log_softmax(self.fc3(h), dim=-1)
