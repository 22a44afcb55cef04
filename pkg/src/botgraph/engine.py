"""Bounded top-down deduction over definite clauses.

The engine answers goals by SLD resolution with variant-based answer tabling:
completed goals cache their ground answers; a goal variant already on the
call stack fails (loop cut), so recursion through the same subgoal cannot
diverge; a global step budget and a recursion-depth bound catch everything
else.  Any cut marks the engine incomplete; that flag, not an exception, is
the signal that a bottom clause may be missing literals.

Built-ins: lteq/2 and gteq/2 over numeric constants evaluate directly; with
one argument unbound they bind it to the bound one, which is what places
threshold literals like lteq(1,1) into bottom clauses.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import EngineError, UnknownPredicateError
from .logic import (
    Compound,
    Constant,
    DefiniteClause,
    Literal,
    Program,
    Term,
    Variable,
    is_ground,
    render_literal,
)

DEFAULT_BUDGET = 200_000
DEFAULT_MAX_DEPTH = 256

BUILTINS = ("lteq", "gteq")

Subst = dict[Variable, Term]


def walk(term: Term, subst: Subst) -> Term:
    while isinstance(term, Variable) and term in subst:
        term = subst[term]
    return term


def resolve(term: Term, subst: Subst) -> Term:
    term = walk(term, subst)
    if isinstance(term, Compound):
        return Compound(term.functor, tuple(resolve(a, subst) for a in term.args))
    return term


def resolve_literal(literal: Literal, subst: Subst) -> Literal:
    return Literal(literal.predicate, tuple(resolve(a, subst) for a in literal.args))


def unify(left: Term, right: Term, subst: Subst) -> Optional[Subst]:
    left, right = walk(left, subst), walk(right, subst)
    if left == right:
        return subst
    if isinstance(left, Variable):
        out = dict(subst)
        out[left] = right
        return out
    if isinstance(right, Variable):
        out = dict(subst)
        out[right] = left
        return out
    if (isinstance(left, Compound) and isinstance(right, Compound)
            and left.functor == right.functor and left.arity == right.arity):
        for a, b in zip(left.args, right.args):
            subst = unify(a, b, subst)
            if subst is None:
                return None
        return subst
    return None


def unify_literal(goal: Literal, head: Literal, subst: Subst) -> Optional[Subst]:
    if goal.predicate != head.predicate or goal.arity != head.arity:
        return None
    for a, b in zip(goal.args, head.args):
        subst = unify(a, b, subst)
        if subst is None:
            return None
    return subst


def _variant_key(literal: Literal) -> tuple:
    """Canonical form with variables numbered by first occurrence."""
    numbering: dict[Variable, int] = {}

    def key(term: Term):
        if isinstance(term, Variable):
            return ("?", numbering.setdefault(term, len(numbering)))
        if isinstance(term, Compound):
            return (term.functor, tuple(key(a) for a in term.args))
        return (term.name, term.numeric)

    return (literal.predicate, literal.arity, tuple(key(a) for a in literal.args))


@dataclass(frozen=True)
class DeriveResult:
    """Ground solutions of a goal, in the engine's deterministic order."""

    solutions: tuple[Literal, ...]
    complete: bool

    def __iter__(self) -> Iterator[Literal]:
        return iter(self.solutions)

    def __len__(self):
        return len(self.solutions)


class Engine:
    """One tabling store over a program (plus optional extra ground facts)."""

    def __init__(self, program: Program, extra_facts: Sequence[Literal] = (),
                 budget: int = DEFAULT_BUDGET, max_depth: int = DEFAULT_MAX_DEPTH):
        if budget <= 0:
            raise ValueError("budget must be positive")
        self._index = program.by_predicate()
        for fact in extra_facts:
            self._index.setdefault(fact.key, []).append(DefiniteClause(fact))
        self.budget = budget
        self.max_depth = max_depth
        self._steps = 0
        self._incomplete = False
        self._table: dict[tuple, tuple[Literal, ...]] = {}
        self._active: dict[tuple, int] = {}  # stack-disciplined: key -> frame index
        self._barrier = math.inf  # lowest active frame a cut reached into
        self._fresh = itertools.count(1)

    @property
    def incomplete(self) -> bool:
        return self._incomplete

    def knows(self, key: tuple[str, int]) -> bool:
        return key in self._index or (key[0] in BUILTINS and key[1] == 2)

    def query(self, goal: Literal) -> DeriveResult:
        if not self.knows(goal.key):
            raise UnknownPredicateError(
                f"unknown predicate {goal.predicate}/{goal.arity} in goal "
                f"{render_literal(goal)}")
        answers = self._solve(goal, 0)
        return DeriveResult(tuple(answers), complete=not self._incomplete)

    # -- internals -----------------------------------------------------------
    def _rename(self, clause: DefiniteClause) -> DefiniteClause:
        serial = next(self._fresh)
        mapping: dict[Variable, Variable] = {}

        def fresh(term: Term) -> Term:
            if isinstance(term, Variable):
                if term not in mapping:
                    mapping[term] = Variable(term.name, serial)
                return mapping[term]
            if isinstance(term, Compound):
                return Compound(term.functor, tuple(fresh(a) for a in term.args))
            return term

        head = Literal(clause.head.predicate, tuple(fresh(a) for a in clause.head.args))
        body = tuple(Literal(b.predicate, tuple(fresh(a) for a in b.args)) for b in clause.body)
        return DefiniteClause(head, body)

    def _builtin(self, goal: Literal) -> list[Literal]:
        a, b = goal.args
        a_free, b_free = isinstance(a, Variable), isinstance(b, Variable)
        if a_free and b_free:
            raise EngineError(
                f"{goal.predicate}/2 needs at least one bound argument: "
                f"{render_literal(goal)}")
        if a_free or b_free:
            bound = b if a_free else a
            if not (isinstance(bound, Constant) and bound.numeric):
                return []
            return [Literal(goal.predicate, (bound, bound))]
        if not all(isinstance(t, Constant) and t.numeric for t in (a, b)):
            return []
        holds = a.value <= b.value if goal.predicate == "lteq" else a.value >= b.value
        return [goal] if holds else []

    def _cut(self, frame_index: float):
        """Record that some active frame's answers may be incomplete."""
        self._incomplete = True
        self._barrier = min(self._barrier, frame_index)

    def _solve(self, goal: Literal, depth: int) -> list[Literal]:
        if goal.predicate in BUILTINS and goal.arity == 2:
            return self._builtin(goal)
        key = _variant_key(goal)
        cached = self._table.get(key)
        if cached is not None:
            return list(cached)
        if key in self._active:
            self._cut(self._active[key])
            return []
        if depth > self.max_depth:
            self._cut(0)
            return []

        clauses = self._index.get(goal.key)
        if clauses is None:
            raise UnknownPredicateError(
                f"unknown predicate {goal.predicate}/{goal.arity} in goal "
                f"{render_literal(goal)}")

        my_index = len(self._active)
        self._active[key] = my_index
        outer_barrier = self._barrier
        self._barrier = math.inf
        answers: dict[Literal, None] = {}
        try:
            for clause in clauses:
                self._steps += 1
                if self._steps > self.budget:
                    self._cut(0)
                    break
                renamed = self._rename(clause)
                subst = unify_literal(goal, renamed.head, {})
                if subst is None:
                    continue
                for final in self._solve_body(renamed.body, subst, depth + 1):
                    answer = resolve_literal(goal, final)
                    if not is_ground(answer):
                        raise EngineError(
                            f"non-ground answer {render_literal(answer)}; "
                            "background clauses must be range-restricted")
                    answers.setdefault(answer)
        finally:
            del self._active[key]
        # only frames whose whole subtree completed without a cut are cacheable;
        # a cut into this frame or below poisons every consumer above it too
        if self._barrier == math.inf:
            self._table[key] = tuple(answers)
            self._barrier = outer_barrier
        else:
            self._barrier = min(outer_barrier, self._barrier)
        return list(answers)

    def _solve_body(self, goals: Sequence[Literal], subst: Subst, depth: int) -> list[Subst]:
        if not goals:
            return [subst]
        first, rest = goals[0], goals[1:]
        out: list[Subst] = []
        instance = resolve_literal(first, subst)
        for answer in self._solve(instance, depth):
            extended = unify_literal(instance, answer, dict(subst))
            if extended is None:
                continue
            out.extend(self._solve_body(rest, extended, depth))
        return out


def derive(program: Program, goal: Literal, budget: int = DEFAULT_BUDGET,
           extra_facts: Sequence[Literal] = ()) -> DeriveResult:
    """All ground instances of `goal` provable from the program and extra facts.

    One-shot convenience wrapper; saturation keeps a single Engine per example
    so the answer tables are shared across its queries.
    """
    return Engine(program, extra_facts, budget=budget).query(goal)
