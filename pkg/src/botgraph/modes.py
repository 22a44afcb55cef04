"""Mode declarations, argument roles, and the type system.

A mode declaration is a head or body schema such as
``modeb(father(+person,-person))``: each argument is an input (+), output (-)
or constant (#) slot of some type, or a structured term over such slots.
Types are sets of ground terms, implemented as unary predicates in the
background knowledge, plus the built-in numeric types `real` and `int`.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Optional

from .logic import (
    Constant,
    Literal,
    PlaceNumber,
    Program,
    Term,
    is_ground_term,
    term_at_place,
    _is_int_lexeme,
)

log = logging.getLogger(__name__)

REAL_TYPE = "real"
INT_TYPE = "int"
BUILTIN_TYPES = (REAL_TYPE, INT_TYPE)

INPUT, OUTPUT, CONSTANT = "+", "-", "#"


class ModeTerm:
    __slots__ = ()


@dataclass(frozen=True)
class InputArg(ModeTerm):
    type_name: str


@dataclass(frozen=True)
class OutputArg(ModeTerm):
    type_name: str


@dataclass(frozen=True)
class ConstantArg(ModeTerm):
    type_name: str


@dataclass(frozen=True)
class StructuredArg(ModeTerm):
    functor: str
    args: tuple[ModeTerm, ...]


_ROLE = {InputArg: INPUT, OutputArg: OUTPUT, ConstantArg: CONSTANT}


@dataclass(frozen=True)
class ModeDecl:
    """A modeh/modeb declaration with an optional recall bound (None = unbounded)."""

    kind: str  # "modeh" | "modeb"
    predicate: str
    args: tuple[ModeTerm, ...] = ()
    recall: Optional[int] = None

    @property
    def arity(self) -> int:
        return len(self.args)

    @property
    def is_head(self) -> bool:
        return self.kind == "modeh"

    def __repr__(self):
        return f"ModeDecl({render_mode(self)!r})"


def render_mode_term(mt: ModeTerm) -> str:
    if isinstance(mt, StructuredArg):
        return f"{mt.functor}({','.join(render_mode_term(a) for a in mt.args)})"
    return _ROLE[type(mt)] + mt.type_name


def render_mode(mode: ModeDecl) -> str:
    recall = "*" if mode.recall is None else str(mode.recall)
    args = ",".join(render_mode_term(a) for a in mode.args)
    schema = mode.predicate if not args else f"{mode.predicate}({args})"
    return f"{mode.kind}({recall},{schema})"


def matches(mode: ModeDecl, literal: Literal) -> bool:
    """True iff the mode declares this literal's predicate symbol and arity."""
    return mode.predicate == literal.predicate and mode.arity == literal.arity


def mode_type(mode: ModeDecl, place: PlaceNumber) -> Optional[tuple[str, str]]:
    """(role, type) of the mode-term at `place`, or None (the paper's `unknown`).

    None covers out-of-range places and places addressing the interior of a
    structured mode-term rather than one of its simple slots.
    """
    if not place:
        return None
    node: ModeTerm | ModeDecl = mode
    for depth, i in enumerate(place):
        args = node.args if isinstance(node, (ModeDecl, StructuredArg)) else None
        if args is None or not 1 <= i <= len(args):
            return None
        node = args[i - 1]
    if isinstance(node, StructuredArg):
        return None
    return (_ROLE[type(node)], node.type_name)


def mode_places(mode: ModeDecl) -> tuple[tuple[PlaceNumber, str, str], ...]:
    """All (place, role, type) triples with a known ModeType, DFS left-to-right."""
    out: list[tuple[PlaceNumber, str, str]] = []

    def walk(prefix: tuple[int, ...], mt: ModeTerm):
        if isinstance(mt, StructuredArg):
            for i, arg in enumerate(mt.args, start=1):
                walk(prefix + (i,), arg)
        else:
            out.append((prefix, _ROLE[type(mt)], mt.type_name))

    for i, arg in enumerate(mode.args, start=1):
        walk((i,), arg)
    return tuple(out)


Occurrence = tuple[Term, str, PlaceNumber]


@dataclass(frozen=True)
class IOTerms:
    inputs: tuple[Occurrence, ...]
    outputs: tuple[Occurrence, ...]
    constants: tuple[Occurrence, ...]


def io_terms(literal: Literal, mode: ModeDecl) -> IOTerms:
    """Partition the mode-visible places of `literal` by role.

    Type membership is *not* checked here; callers validate against a
    TypeSystem where the context requires it.  Places that do not exist in
    the literal (a structured mode-term over a differently-shaped argument)
    contribute nothing.
    """
    ins: list[Occurrence] = []
    outs: list[Occurrence] = []
    consts: list[Occurrence] = []
    for place, role, type_name in mode_places(mode):
        try:
            term = term_at_place(literal, place)
        except Exception:
            continue
        bucket = ins if role == INPUT else outs if role == OUTPUT else consts
        bucket.append((term, type_name, place))
    return IOTerms(tuple(ins), tuple(outs), tuple(consts))


class TypeSystem:
    """Type membership oracle: unary BK facts plus built-in numeric types."""

    def __init__(self, members: Optional[dict[str, dict[Term, None]]] = None):
        # per type: ground terms in first-declaration order
        self._members: dict[str, dict[Term, None]] = members or {}

    @classmethod
    def from_program(cls, program: Program, declared: Iterable[str] = ()) -> "TypeSystem":
        """Collect unary ground facts as type definitions.

        `declared` lists the type names referenced by the modes; names with no
        facts (and not built-in) are legal but flagged with a warning.
        """
        members: dict[str, dict[Term, None]] = {}
        for fact in program.facts():
            if fact.arity == 1 and is_ground_term(fact.args[0]):
                members.setdefault(fact.predicate, {})[fact.args[0]] = None
        ts = cls(members)
        for name in declared:
            if name not in members and name not in BUILTIN_TYPES:
                log.warning("type %r is referenced by the modes but has no facts", name)
        return ts

    def has_type(self, term: Term, type_name: str) -> bool:
        if type_name == REAL_TYPE:
            return isinstance(term, Constant) and term.numeric
        if type_name == INT_TYPE:
            return isinstance(term, Constant) and term.numeric and _is_int_lexeme(term.name)
        return term in self._members.get(type_name, {})

    def terms_of(self, type_name: str) -> tuple[Term, ...]:
        """Declared members of a finite (non-built-in) type, declaration order."""
        if type_name in BUILTIN_TYPES:
            raise ValueError(f"built-in type {type_name!r} is not enumerable")
        return tuple(self._members.get(type_name, {}))

    @property
    def type_names(self) -> tuple[str, ...]:
        return tuple(self._members)


def declared_type_names(modes: Iterable[ModeDecl]) -> tuple[str, ...]:
    """Type names referenced by a set of modes, in declaration order."""
    seen: dict[str, None] = {}
    for mode in modes:
        for _, _, type_name in mode_places(mode):
            seen.setdefault(type_name)
    return tuple(seen)
