"""Boolean propositionalisation of bottom clauses.

Two baselines: one column per distinct bottom-clause body literal across the
corpus, and one column per relation (optionally refined by the '#'-constant
values a literal carries under its saturating mode).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .logic import literal_key, render_literal
from .modes import CONSTANT, mode_places
from .saturation import BottomClause
from .logic import term_at_place, render_term


@dataclass(frozen=True)
class BooleanFeatureMatrix:
    feature_names: tuple[str, ...]
    matrix: np.ndarray  # shape (examples, features), dtype uint8
    labels: tuple[str, ...]
    example_ids: tuple[str, ...]

    def column(self, name: str) -> np.ndarray:
        return self.matrix[:, self.feature_names.index(name)]

    def to_csv(self) -> str:
        header = "id,label," + ",".join(f'"{n}"' for n in self.feature_names)
        lines = [header]
        for i, example_id in enumerate(self.example_ids):
            cells = ",".join(str(int(v)) for v in self.matrix[i])
            lines.append(f"{example_id},{self.labels[i]},{cells}")
        return "\n".join(lines) + "\n"


def propositionalise_bcp(bottoms: Sequence[Optional[BottomClause]], labels: Sequence[str],
                         example_ids: Optional[Sequence[str]] = None) -> BooleanFeatureMatrix:
    """Entry (i, j) = 1 iff distinct body literal j occurs in bottom clause i.

    Columns are the union of body literals over the corpus in canonical term
    order; empty saturations give all-zero rows.
    """
    if len(bottoms) != len(labels):
        raise ValueError("one label per bottom clause required")
    literals = sorted(
        {lit for b in bottoms if b is not None for lit in b.clause.body},
        key=literal_key)
    index = {lit: j for j, lit in enumerate(literals)}
    matrix = np.zeros((len(bottoms), len(literals)), dtype=np.uint8)
    for i, bottom in enumerate(bottoms):
        if bottom is None:
            continue
        for lit in bottom.clause.body:
            matrix[i, index[lit]] = 1
    names = tuple(render_literal(lit) for lit in literals)
    ids = tuple(example_ids) if example_ids else tuple(str(i) for i in range(len(bottoms)))
    return BooleanFeatureMatrix(names, matrix, tuple(labels), ids)


def _relation_feature(literal, mode, refine: bool) -> str:
    if not refine or mode is None:
        return literal.predicate
    consts = []
    for place, role, _ in mode_places(mode):
        if role == CONSTANT:
            consts.append(render_term(term_at_place(literal, place)))
    if not consts:
        return literal.predicate
    return literal.predicate + "#" + "#".join(consts)


def propositionalise_drm(bottoms: Sequence[Optional[BottomClause]], labels: Sequence[str],
                         example_ids: Optional[Sequence[str]] = None,
                         refine_by_constants: bool = False) -> BooleanFeatureMatrix:
    """Entry (i, j) = 1 iff some body literal of bottom clause i instantiates relation j.

    With refine_by_constants, a relation whose mode has '#' places splits into
    one column per observed constant combination (e.g. has_struc#benzene).
    """
    if len(bottoms) != len(labels):
        raise ValueError("one label per bottom clause required")
    names: dict[str, None] = {}
    per_example: list[set[str]] = []
    for bottom in bottoms:
        present: set[str] = set()
        if bottom is not None:
            for lit in bottom.clause.body:
                present.add(_relation_feature(lit, bottom.mode_for(lit), refine_by_constants))
        per_example.append(present)
        for name in sorted(present):
            names.setdefault(name)
    ordered = tuple(sorted(names))
    matrix = np.zeros((len(bottoms), len(ordered)), dtype=np.uint8)
    for i, present in enumerate(per_example):
        for name in present:
            matrix[i, ordered.index(name)] = 1
    ids = tuple(example_ids) if example_ids else tuple(str(i) for i in range(len(bottoms)))
    return BooleanFeatureMatrix(ordered, matrix, tuple(labels), ids)
