"""Desk-scale graph classification over TU-format exports of bottom-clause graphs."""

from .layers import (
    ARMAConv,
    GATConv,
    GCNConv,
    KGNNConv,
    MLPHead,
    SAGEConv,
    SAGPool,
    make_conv,
    normalised_adjacency,
    readout,
)
from .model import GraphClassifier, ModelSpec, load_checkpoint, save_checkpoint
from .train import TrainConfig, TrainResult, evaluate, grid_search, predict, split_dataset, train
from .tudata import (
    FeatureStats,
    TUFormatError,
    TUGraph,
    class_count,
    feature_width,
    load_tu,
    standardise_features,
)

__version__ = "0.1.0"
