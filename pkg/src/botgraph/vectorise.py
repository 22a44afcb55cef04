"""Numeric vertex features for clause-graphs.

Every vertex gets one fixed-width vector: a predicate one-hot block (x-vertices),
a type one-hot block (y-vertices), a one-hot block over the ground terms of
'#'-marked non-numeric types, and a single numeric slot holding the value of
(τ, #real) vertices.  The vocabulary fixing the blocks is computed once per
dataset, in declaration order, and shipped alongside every export so train
and test vectors align.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import VocabularyError
from .graphs import ClauseGraph, XLabel, YLabel, antecedent, bot_graph, ugraph
from .logic import DefiniteClause, Program, Term, render_term
from .modes import (
    BUILTIN_TYPES,
    CONSTANT,
    ModeDecl,
    TypeSystem,
    mode_places,
)
from .saturation import SaturationConfig


@dataclass(frozen=True)
class Vocabulary:
    """(P, Γ, Γ_#, T_#) in declaration order."""

    predicates: tuple[tuple[str, int], ...]
    types: tuple[str, ...]       # may contain '#'-marked names
    hash_types: tuple[str, ...]  # Γ_#: '#'-marked non-numeric type names, unmarked here
    hash_terms: tuple[Term, ...]  # T_#: ground terms of the Γ_# types

    @property
    def width(self) -> int:
        return len(self.predicates) + len(self.types) + max(len(self.hash_terms), 1) + 1

    @classmethod
    def build(cls, modes: Sequence[ModeDecl], types: TypeSystem) -> "Vocabulary":
        preds: dict[tuple[str, int], None] = {}
        gamma: dict[str, None] = {}
        hash_types: dict[str, None] = {}
        for mode in modes:
            preds.setdefault((mode.predicate, mode.arity))
            for _, role, type_name in mode_places(mode):
                if role == CONSTANT:
                    gamma.setdefault("#" + type_name)
                    if type_name not in BUILTIN_TYPES:
                        hash_types.setdefault(type_name)
                else:
                    gamma.setdefault(type_name)
        hash_terms: dict[Term, None] = {}
        for type_name in hash_types:
            for term in types.terms_of(type_name):
                hash_terms.setdefault(term)
        return cls(tuple(preds), tuple(gamma), tuple(hash_types), tuple(hash_terms))

    def x_vector(self, label: XLabel) -> tuple[float, ...]:
        lam, _ = label
        rho = [0.0] * len(self.predicates)
        try:
            rho[self.predicates.index((lam.predicate, lam.arity))] = 1.0
        except ValueError:
            raise VocabularyError(
                f"predicate {lam.predicate}/{lam.arity} is not in the vocabulary") from None
        return tuple(rho) + (0.0,) * len(self.types) \
            + (0.0,) * max(len(self.hash_terms), 1) + (0.0,)

    def y_vector(self, label: YLabel) -> tuple[float, ...]:
        term, type_name = label
        gamma = [0.0] * len(self.types)
        try:
            gamma[self.types.index(type_name)] = 1.0
        except ValueError:
            raise VocabularyError(f"type {type_name!r} is not in the vocabulary") from None
        tau = [0.0] * max(len(self.hash_terms), 1)
        if type_name.startswith("#") and type_name[1:] in self.hash_types:
            try:
                tau[self.hash_terms.index(term)] = 1.0
            except ValueError:
                raise VocabularyError(
                    f"term {render_term(term)} of type {type_name!r} is not in T_#") from None
        numeric = 0.0
        if type_name == "#real":
            numeric = float(term.value)
        return (0.0,) * len(self.predicates) + tuple(gamma) + tuple(tau) + (numeric,)

    def to_dict(self) -> dict:
        return {
            "predicates": [f"{name}/{arity}" for name, arity in self.predicates],
            "types": list(self.types),
            "hash_types": list(self.hash_types),
            "hash_terms": [render_term(t) for t in self.hash_terms],
            "width": self.width,
        }


@dataclass(frozen=True, eq=False)
class VectorisedGraph:
    """An undirected graph with per-vertex feature vectors, export-ready.

    Vertices are ordered x-vertices first then y-vertices, both in the
    insertion order of the source clause-graph; `edges` holds one arc per
    direction over those indices.
    """

    x_labels: tuple[XLabel, ...]
    y_labels: tuple[YLabel, ...]
    features: tuple[tuple[float, ...], ...]
    edges: tuple[tuple[int, int], ...]
    vocab: Vocabulary
    exhaustive: bool = True

    @property
    def n_vertices(self) -> int:
        return len(self.features)

    @property
    def is_empty(self) -> bool:
        return not self.features

    def __eq__(self, other):
        if not isinstance(other, VectorisedGraph):
            return NotImplemented
        return (self.features == other.features
                and sorted(self.edges) == sorted(other.edges))

    def __hash__(self):
        return hash((self.features, tuple(sorted(self.edges))))


def vectorise(graph: ClauseGraph, vocab: Vocabulary) -> VectorisedGraph:
    """Attach ψ′ feature vectors to every vertex of a clause-graph."""
    features = [vocab.x_vector(label) for label in graph.x_labels]
    features += [vocab.y_vector(label) for label in graph.y_labels]
    offset = len(graph.x_labels)
    edges = [(x, offset + y) for x, y in graph.e_out]
    edges += [(offset + y, x) for y, x in graph.e_in]
    return VectorisedGraph(graph.x_labels, graph.y_labels, tuple(features),
                           tuple(edges), vocab, exhaustive=graph.exhaustive)


def transform_graph(graph: ClauseGraph, vocab: Vocabulary) -> VectorisedGraph:
    """Vectorise(UGraph(Antecedent(G))), exactly that composition."""
    return vectorise(ugraph(antecedent(graph)), vocab)


def gnn_graph(program: Program, modes: Sequence[ModeDecl], types: TypeSystem,
              config: SaturationConfig, example: DefiniteClause,
              vocab: Vocabulary) -> VectorisedGraph:
    """Full pipeline: saturate, build the bottom-graph, transform it."""
    return transform_graph(bot_graph(program, modes, types, config, example), vocab)
