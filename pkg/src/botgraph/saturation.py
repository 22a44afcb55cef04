"""Construction of depth-bounded most-specific (bottom) clauses.

Layered, mode-directed deduction: the example's head seeds the term registry
at depth 0 through the first matching head mode; at each layer 1..d every
body mode is queried with every combination of already-registered input
terms, admitting up to the mode's recall bound of type-correct answers, whose
output terms join the registry for the next layer.  Duplicate literals keep
their first (minimal-depth) entry; set semantics make the layer order
immaterial downstream.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .engine import Engine, DEFAULT_BUDGET
from .logic import (
    Compound,
    DefiniteClause,
    Literal,
    Program,
    Term,
    Variable,
    is_ground,
    render_literal,
)
from .modes import (
    INPUT,
    InputArg,
    ModeDecl,
    StructuredArg,
    TypeSystem,
    io_terms,
    matches,
    mode_places,
)
from .sequences import DEFAULT_SEQUENCE_CAP, LambdaMuSeq


@dataclass(frozen=True)
class SaturationConfig:
    depth: int = 2
    default_recall: Optional[int] = None  # applied to modes without a recall; None = unbounded
    budget: int = DEFAULT_BUDGET  # resolution steps per saturation
    max_literals_per_depth: Optional[int] = None
    sequence_cap: int = DEFAULT_SEQUENCE_CAP  # downstream λμ-enumeration cap

    def __post_init__(self):
        if self.depth < 0:
            raise ValueError("depth limit must be non-negative")
        if self.budget <= 0:
            raise ValueError("resolution budget must be positive")


@dataclass(frozen=True)
class BottomClause:
    """A bottom clause with its witnessing λμ-sequence and provenance."""

    clause: DefiniteClause
    witness: LambdaMuSeq
    complete: bool  # no derivation budget or per-depth cap was hit
    provenance: tuple[tuple[Literal, ModeDecl, int], ...]  # (literal, mode, entry depth)
    head_mode: ModeDecl

    def mode_for(self, literal: Literal) -> Optional[ModeDecl]:
        for lit, mode, _ in self.provenance:
            if lit == literal:
                return mode
        return None

    def depth_of(self, literal: Literal) -> Optional[int]:
        for lit, mode, depth in self.provenance:
            if lit == literal:
                return depth
        return None


def _schema_goal(mode: ModeDecl, binding: dict[tuple[int, ...], Term]) -> Literal:
    """Build a query literal from a mode schema: inputs bound, the rest free."""
    counter = itertools.count(1)

    def build(mt, place):
        if isinstance(mt, StructuredArg):
            return Compound(mt.functor,
                            tuple(build(a, place + (i,)) for i, a in enumerate(mt.args, 1)))
        if isinstance(mt, InputArg):
            return binding[place]
        return Variable(f"O{next(counter)}")

    return Literal(mode.predicate,
                   tuple(build(mt, (i,)) for i, mt in enumerate(mode.args, 1)))


def saturate(program: Program, modes: Sequence[ModeDecl], types: TypeSystem,
             config: SaturationConfig, example: DefiniteClause) -> Optional[BottomClause]:
    """The depth-bounded bottom clause for a ground example, or None.

    None is returned when no head mode matches (and type-checks) the example's
    head.  The example's body facts are added to the fact store under their own
    predicate names so background clauses can consume them.
    """
    if not is_ground(example.head) or not all(is_ground(b) for b in example.body):
        raise ValueError(f"example must be ground: {render_literal(example.head)}")

    head = example.head
    head_mode = None
    for mode in modes:
        if not mode.is_head or not matches(mode, head):
            continue
        io = io_terms(head, mode)
        well_typed = all(types.has_type(t, g) for t, g, _ in
                         io.inputs + io.outputs + io.constants)
        if well_typed:
            head_mode = mode
            break
    if head_mode is None:
        return None

    engine = Engine(program, extra_facts=example.body, budget=config.budget)

    # registry of usable terms: (term, type) -> depth of first registration
    registry: dict[tuple[Term, str], int] = {}
    for term, type_name, _ in io_terms(head, head_mode).inputs:
        registry.setdefault((term, type_name), 0)

    body: dict[Literal, tuple[ModeDecl, int]] = {}
    queried: set = set()
    complete = True
    body_modes = [m for m in modes if not m.is_head]

    for layer in range(1, config.depth + 1):
        new_terms: dict[tuple[Term, str], int] = {}
        admitted_this_layer = 0
        for mode in body_modes:
            input_places = [(p, g) for p, role, g in mode_places(mode) if role == INPUT]
            candidate_lists = []
            for place, type_name in input_places:
                terms = [t for (t, g), d in registry.items()
                         if g == type_name and d <= layer - 1]
                candidate_lists.append(terms)
            if input_places and any(not lst for lst in candidate_lists):
                continue
            recall = mode.recall if mode.recall is not None else config.default_recall
            for combo in itertools.product(*candidate_lists):
                binding = {place: term
                           for (place, _), term in zip(input_places, combo)}
                query_key = (mode, tuple(binding.items()))
                if query_key in queried:
                    continue
                queried.add(query_key)
                goal = _schema_goal(mode, binding)
                result = engine.query(goal)
                taken = 0
                for solution in result:
                    if recall is not None and taken >= recall:
                        break
                    io = io_terms(solution, mode)
                    ok = all(types.has_type(t, g) for t, g, _ in io.outputs) and \
                        all(types.has_type(t, g) for t, g, _ in io.constants)
                    if not ok:
                        continue
                    taken += 1
                    if solution == head or solution in body:
                        continue
                    if config.max_literals_per_depth is not None and \
                            admitted_this_layer >= config.max_literals_per_depth:
                        complete = False
                        break
                    body[solution] = (mode, layer)
                    admitted_this_layer += 1
                    for term, type_name, _ in io.outputs:
                        key = (term, type_name)
                        if key not in registry and key not in new_terms:
                            new_terms[key] = layer
        for key, depth in new_terms.items():
            registry.setdefault(key, depth)

    if engine.incomplete:
        complete = False

    clause = DefiniteClause(head, tuple(body))
    witness = ((head, head_mode),) + tuple((lit, mode) for lit, (mode, _) in body.items())
    provenance = ((head, head_mode, 0),) + \
        tuple((lit, mode, depth) for lit, (mode, depth) in body.items())
    return BottomClause(clause, witness, complete, provenance, head_mode)
