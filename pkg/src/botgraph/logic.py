"""Ground first-order syntax: terms, literals, definite clauses, place-numbering.

Values are immutable after construction and safe to share across threads.
Variables exist only transiently inside the deduction engine; bottom clauses
and everything downstream of them are fully ground.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import PositionError

# A place-number addresses a (possibly nested) argument position of a literal,
# 1-based at every level.  The empty tuple is only a recursion base inside
# term_in_term, never a literal-level place.
PlaceNumber = tuple[int, ...]

LIST_FUNCTOR = "."
NIL = None  # assigned below once Constant exists


class Term:
    """Base class for terms; concrete kinds are Constant, Compound, Variable."""

    __slots__ = ()


@dataclass(frozen=True)
class Constant(Term):
    """A symbolic or numeric constant.

    Numeric constants keep their lexeme so that 1 and 1.0 stay distinct
    tokens; the numeric/symbolic distinction lives here, the int-vs-real
    distinction lives in the type layer.
    """

    name: str
    numeric: bool = False

    @property
    def value(self):
        if not self.numeric:
            raise ValueError(f"constant {self.name!r} is not numeric")
        if _is_int_lexeme(self.name):
            return int(self.name)
        return float(self.name)

    def __repr__(self):
        return f"Constant({self.name!r})"


@dataclass(frozen=True)
class Compound(Term):
    functor: str
    args: tuple[Term, ...]

    @property
    def arity(self) -> int:
        return len(self.args)

    def __repr__(self):
        return f"Compound({self.functor!r}, {self.args!r})"


@dataclass(frozen=True)
class Variable(Term):
    """Only appears inside background-knowledge clauses and the engine."""

    name: str
    serial: int = 0


NIL = Constant("nil")


def _is_int_lexeme(text: str) -> bool:
    body = text[1:] if text[:1] == "-" else text
    return body.isdigit()


def mklist(items: Sequence[Term], tail: Term = NIL) -> Term:
    """Desugar [a,b,c] into right-nested './2' terms ending in nil."""
    out = tail
    for item in reversed(items):
        out = Compound(LIST_FUNCTOR, (item, out))
    return out


def list_items(term: Term) -> Optional[tuple[list[Term], Term]]:
    """Inverse of mklist: returns (items, tail) when term is a cons spine."""
    if not (isinstance(term, Compound) and term.functor == LIST_FUNCTOR and term.arity == 2):
        return None
    items = []
    while isinstance(term, Compound) and term.functor == LIST_FUNCTOR and term.arity == 2:
        items.append(term.args[0])
        term = term.args[1]
    return items, term


@dataclass(frozen=True)
class Literal:
    """A positive ground (or, in BK, non-ground) atom.

    Body literals of a definite clause are negative in the clausal reading;
    the sign is positional, so only atoms are stored.
    """

    predicate: str
    args: tuple[Term, ...] = ()

    @property
    def arity(self) -> int:
        return len(self.args)

    @property
    def key(self) -> tuple[str, int]:
        return (self.predicate, self.arity)

    def __repr__(self):
        return f"Literal({render_literal(self)!r})"


def term_in_term(term: Term, place: PlaceNumber) -> Term:
    """Term at place-number `place` inside `term`; ⟨⟩ is the term itself."""
    if not place:
        return term
    if not isinstance(term, Compound):
        raise PositionError(f"no place {place} in non-compound term {render_term(term)}")
    i = place[0]
    if not 1 <= i <= term.arity:
        raise PositionError(f"index {i} out of range in {render_term(term)}")
    return term_in_term(term.args[i - 1], place[1:])


def term_at_place(literal: Literal, place: PlaceNumber) -> Term:
    """Term at place-number `place` of `literal` (place must be non-empty)."""
    if not place:
        raise PositionError("the empty place-number does not address a literal position")
    i = place[0]
    if not 1 <= i <= literal.arity:
        raise PositionError(f"index {i} out of range in {render_literal(literal)}")
    return term_in_term(literal.args[i - 1], place[1:])


def enumerate_places(literal: Literal) -> list[tuple[PlaceNumber, Term]]:
    """All (place-number, term) pairs of a literal, depth-first left-to-right."""
    out: list[tuple[PlaceNumber, Term]] = []

    def walk(prefix: tuple[int, ...], term: Term):
        out.append((prefix, term))
        if isinstance(term, Compound):
            for i, arg in enumerate(term.args, start=1):
                walk(prefix + (i,), arg)

    for i, arg in enumerate(literal.args, start=1):
        walk((i,), arg)
    return out


def is_ground_term(term: Term) -> bool:
    if isinstance(term, Variable):
        return False
    if isinstance(term, Compound):
        return all(is_ground_term(a) for a in term.args)
    return True


def is_ground(literal: Literal) -> bool:
    return all(is_ground_term(a) for a in literal.args)


# Canonical ordering: symbolic constants < numeric constants < compounds,
# then lexicographic.  Gives deterministic set renderings and file outputs.

def term_key(term: Term):
    if isinstance(term, Constant):
        if term.numeric:
            return (1, float(term.value), term.name)
        return (0, term.name)
    if isinstance(term, Compound):
        return (2, term.functor, term.arity, tuple(term_key(a) for a in term.args))
    return (3, term.name, term.serial)  # variables, engine-internal only


def literal_key(literal: Literal):
    return (literal.predicate, literal.arity, tuple(term_key(a) for a in literal.args))


@dataclass(frozen=True, eq=False)
class DefiniteClause:
    """Head plus body atoms; equality and hashing use set semantics.

    The stored body keeps insertion order (saturation provenance reads it)
    but duplicates are collapsed on construction.  The source location, when
    the clause came from a file, is diagnostic only and never compared.
    """

    head: Literal
    body: tuple[Literal, ...] = ()
    source: Optional[tuple[str, int]] = None  # (file, line)

    def __post_init__(self):
        seen = dict.fromkeys(self.body)
        if len(seen) != len(self.body):
            object.__setattr__(self, "body", tuple(seen))

    @property
    def location(self) -> str:
        if self.source is None:
            return "<unknown>"
        return f"{self.source[0]}:{self.source[1]}"

    @property
    def literals(self) -> frozenset[Literal]:
        return frozenset((self.head,)) | frozenset(self.body)

    def body_set(self) -> frozenset[Literal]:
        return frozenset(self.body)

    def __eq__(self, other):
        if not isinstance(other, DefiniteClause):
            return NotImplemented
        return self.head == other.head and self.body_set() == other.body_set()

    def __hash__(self):
        return hash((self.head, self.body_set()))

    def __repr__(self):
        return f"DefiniteClause({render_clause(self)!r})"


def clause_equal(left: DefiniteClause, right: DefiniteClause) -> bool:
    """Set equality of the signed literal sets (body order and duplicates ignored)."""
    return left == right


@dataclass(frozen=True)
class Program:
    """A list of definite clauses plus a predicate registry."""

    clauses: tuple[DefiniteClause, ...] = ()
    source: str = "<program>"

    def by_predicate(self) -> dict[tuple[str, int], list[DefiniteClause]]:
        index: dict[tuple[str, int], list[DefiniteClause]] = {}
        for clause in self.clauses:
            index.setdefault(clause.head.key, []).append(clause)
        return index

    @property
    def predicates(self) -> tuple[tuple[str, int], ...]:
        return tuple(dict.fromkeys(c.head.key for c in self.clauses))

    def facts(self) -> Iterator[Literal]:
        for clause in self.clauses:
            if not clause.body:
                yield clause.head

    def extended(self, facts: Sequence[Literal]) -> "Program":
        """A copy with extra ground facts appended (e.g. an example's body)."""
        extra = tuple(DefiniteClause(f) for f in facts)
        return Program(self.clauses + extra, source=self.source)


_ATOM_OK = set("abcdefghijklmnopqrstuvwxyz")


def _atom_needs_quotes(name: str) -> bool:
    if not name or name[0] not in _ATOM_OK:
        return True
    return not all(c.isalnum() or c == "_" for c in name)


def render_term(term: Term) -> str:
    if isinstance(term, Constant):
        if term.numeric:
            return term.name
        return f"'{term.name}'" if _atom_needs_quotes(term.name) else term.name
    if isinstance(term, Variable):
        return term.name if term.serial == 0 else f"{term.name}_{term.serial}"
    sugar = list_items(term)
    if sugar is not None:
        items, tail = sugar
        inner = ",".join(render_term(t) for t in items)
        if tail == NIL:
            return f"[{inner}]"
        return f"[{inner}|{render_term(tail)}]"
    args = ",".join(render_term(a) for a in term.args)
    functor = f"'{term.functor}'" if _atom_needs_quotes(term.functor) else term.functor
    return f"{functor}({args})"


def render_literal(literal: Literal) -> str:
    name = f"'{literal.predicate}'" if _atom_needs_quotes(literal.predicate) else literal.predicate
    if not literal.args:
        return name
    return f"{name}({','.join(render_term(a) for a in literal.args)})"


def render_clause(clause: DefiniteClause, *, sort_body: bool = False) -> str:
    body = clause.body
    if sort_body:
        body = tuple(sorted(body, key=literal_key))
    if not body:
        return f"{render_literal(clause.head)}."
    return f"{render_literal(clause.head)} :- {', '.join(render_literal(b) for b in body)}."


def render_program(program: Program) -> str:
    return "\n".join(render_clause(c) for c in program.clauses) + ("\n" if program.clauses else "")
