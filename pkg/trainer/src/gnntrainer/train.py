"""Training loop: Adam, NLL loss, early stopping on the validation split.

train() consumes a training set (a tenth of it becomes the validation set),
tracks per-epoch metrics, restores the best-validation checkpoint and can
write a metrics document plus a model checkpoint.  grid_search() picks the
embedding width m over {8, 128} by validation accuracy.
"""
from __future__ import annotations

import copy
import json
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import torch
from torch import nn

from .model import GraphClassifier, ModelSpec, save_checkpoint
from .tudata import TUGraph, class_count, feature_width


@dataclass(frozen=True)
class TrainConfig:
    learning_rate: float = 0.0005
    weight_decay: float = 0.0001
    betas: tuple[float, float] = (0.9, 0.999)
    batch_size: int = 128
    max_epochs: int = 1000
    patience: int = 50
    validation_fraction: float = 0.1
    m_grid: tuple[int, ...] = (8, 128)

    def __post_init__(self):
        for name in ("learning_rate", "weight_decay", "batch_size", "max_epochs",
                     "patience", "validation_fraction"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


@dataclass
class TrainResult:
    model: GraphClassifier
    history: list[dict]
    best_epoch: int
    best_val_accuracy: float
    notes: dict = field(default_factory=dict)

    def save_metrics(self, path, test_accuracy: Optional[float] = None):
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps({
            "spec": self.model.spec.__dict__,
            "notes": self.notes,
            "best_epoch": self.best_epoch,
            "best_val_accuracy": self.best_val_accuracy,
            "test_accuracy": test_accuracy,
            "history": self.history,
        }, indent=1) + "\n")

    def save_checkpoint(self, path):
        save_checkpoint(self.model, path)


def split_dataset(graphs: Sequence[TUGraph], train_fraction: float = 0.7,
                  seed: int = 0) -> tuple[list[TUGraph], list[TUGraph]]:
    """Shuffled train/test split (the 70:30 outer split)."""
    order = list(range(len(graphs)))
    random.Random(seed).shuffle(order)
    cut = int(round(train_fraction * len(graphs)))
    return [graphs[i] for i in order[:cut]], [graphs[i] for i in order[cut:]]


def _batches(items, size):
    for start in range(0, len(items), size):
        yield items[start:start + size]


@torch.no_grad()
def predict(model: GraphClassifier, graphs: Sequence[TUGraph]) -> list[int]:
    """Predicted 1-based class labels, one per graph."""
    if not graphs:
        raise ValueError("cannot predict on an empty graph list")
    model.eval()
    out = []
    for batch in _batches(list(graphs), 256):
        out.extend((model(batch).argmax(dim=1) + 1).tolist())
    return out


def evaluate(model: GraphClassifier, graphs: Sequence[TUGraph]) -> float:
    """Fraction of graphs whose predicted label matches their stored label."""
    predictions = predict(model, graphs)
    hits = sum(p == g.label for p, g in zip(predictions, graphs))
    return hits / len(predictions)


def _epoch_loss(model, graphs, loss_fn, optimiser, batch_size, train: bool):
    total, n = 0.0, 0
    model.train(train)
    for batch in _batches(graphs, batch_size):
        targets = torch.tensor([g.label - 1 for g in batch])
        if train:
            optimiser.zero_grad()
            loss = loss_fn(model(batch), targets)
            loss.backward()
            optimiser.step()
        else:
            with torch.no_grad():
                loss = loss_fn(model(batch), targets)
        total += loss.item() * len(batch)
        n += len(batch)
    return total / max(n, 1)


def train(graphs: Sequence[TUGraph], spec: ModelSpec, config: TrainConfig,
          seed: int = 0, n_classes: Optional[int] = None) -> TrainResult:
    """Fit one model; the best-validation-epoch weights are what you get back."""
    graphs = list(graphs)
    if not graphs:
        raise ValueError("empty training set")
    torch.manual_seed(seed)
    rng = random.Random(seed)
    order = list(range(len(graphs)))
    rng.shuffle(order)
    n_val = max(1, int(round(config.validation_fraction * len(graphs))))
    if len(graphs) <= n_val:
        raise ValueError("training set too small to carve out a validation split")
    val = [graphs[i] for i in order[:n_val]]
    fit = [graphs[i] for i in order[n_val:]]

    n_classes = n_classes or class_count(graphs)
    model = GraphClassifier(spec, feature_width(graphs), n_classes)
    optimiser = torch.optim.Adam(model.parameters(), lr=config.learning_rate,
                                 betas=config.betas, weight_decay=config.weight_decay)
    loss_fn = nn.NLLLoss()

    history = []
    best_state, best_epoch, best_val_acc, best_val_loss = None, 0, -1.0, float("inf")
    for epoch in range(1, config.max_epochs + 1):
        rng.shuffle(fit)
        train_loss = _epoch_loss(model, fit, loss_fn, optimiser, config.batch_size, True)
        val_loss = _epoch_loss(model, val, loss_fn, optimiser, config.batch_size, False)
        record = {
            "epoch": epoch,
            "train_loss": train_loss,
            "train_accuracy": evaluate(model, fit),
            "val_loss": val_loss,
            "val_accuracy": evaluate(model, val),
        }
        history.append(record)
        improved = (record["val_accuracy"], -val_loss) > (best_val_acc, -best_val_loss)
        if improved:
            best_state = copy.deepcopy(model.state_dict())
            best_epoch, best_val_acc, best_val_loss = epoch, record["val_accuracy"], val_loss
        if epoch - best_epoch >= config.patience:
            break

    model.load_state_dict(best_state)
    model.eval()
    notes = {
        "seed": seed,
        "variant": spec.variant_name,
        "defaults": {"gat_heads": spec.gat_heads, "arma_stacks": spec.arma_stacks,
                     "arma_depth": spec.arma_depth},
        "stopped_epoch": history[-1]["epoch"],
    }
    return TrainResult(model, history, best_epoch, best_val_acc, notes)


def grid_search(graphs: Sequence[TUGraph], variant: int, config: TrainConfig,
                seed: int = 0) -> TrainResult:
    """Train one model per m in the grid; best validation accuracy wins."""
    results = []
    for m in config.m_grid:
        spec = ModelSpec(variant=variant, m=m)
        results.append(train(graphs, spec, config, seed=seed))
    best = max(results, key=lambda r: r.best_val_accuracy)
    best.notes["m_grid"] = list(config.m_grid)
    best.notes["chosen_m"] = best.model.spec.m
    return best
