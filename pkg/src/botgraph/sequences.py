"""λμ-sequences: the certificates of mode-language membership.

A λμ-sequence pairs every literal of a ground clause with a matching mode,
head first, such that typing, input availability, head-output coverage and
the term-depth bound all hold.  A clause is in the depth-limited mode
language iff it is empty or has at least one such sequence.

The default checks are strict.  `open_head_outputs=True` exempts head output
terms that no body literal produces from the coverage and depth constraints;
this is the form bottom clauses produced at small depth limits satisfy (their
head outputs may only become derivable at a larger depth limit).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .logic import DefiniteClause, Literal, Term, is_ground
from .modes import ModeDecl, TypeSystem, io_terms, matches

LambdaMu = tuple[Literal, ModeDecl]
LambdaMuSeq = tuple[LambdaMu, ...]

INFINITE_DEPTH = math.inf

DEFAULT_SEQUENCE_CAP = 256


def _typed(ts: TypeSystem, occurrences) -> bool:
    return all(ts.has_type(term, type_name) for term, type_name, _ in occurrences)


def term_depths(seq: LambdaMuSeq, ts: Optional[TypeSystem] = None) -> dict[tuple[Term, str], float]:
    """Depth of every input/output (term, type) occurrence, given an assignment.

    Head input terms are at depth 0.  Any other (term, type) is one more than
    the minimum depth over the *other* terms of body literals that produce it
    as an output; terms never produced stay at the infinity marker.
    Computed as a least fixpoint (the producing literals may feed each other).
    """
    head_pairs = seq[:1]
    body_pairs = seq[1:]
    depths: dict[tuple[Term, str], float] = {}
    producers: dict[tuple[Term, str], list[tuple[tuple[Term, str], ...]]] = {}

    for literal, mode in head_pairs:
        io = io_terms(literal, mode)
        for term, type_name, _ in io.inputs:
            depths[(term, type_name)] = 0.0
        for term, type_name, _ in io.outputs:
            depths.setdefault((term, type_name), INFINITE_DEPTH)

    for literal, mode in body_pairs:
        io = io_terms(literal, mode)
        visible = [(t, g) for t, g, _ in io.inputs + io.outputs + io.constants]
        for term, type_name, _ in io.inputs:
            depths.setdefault((term, type_name), INFINITE_DEPTH)
        for term, type_name, _ in io.outputs:
            key = (term, type_name)
            depths.setdefault(key, INFINITE_DEPTH)
            others = tuple((t, g) for t, g in visible if (t, g) != key)
            producers.setdefault(key, []).append(others)

    changed = True
    while changed:
        changed = False
        for key, entries in producers.items():
            if depths.get(key) == 0.0:
                continue
            best = INFINITE_DEPTH
            for others in entries:
                if not others:
                    best = min(best, 1.0)  # a producer with no other terms
                    continue
                local = min(depths.get(other, INFINITE_DEPTH) for other in others)
                best = min(best, local + 1.0)
            if best < depths[key]:
                depths[key] = best
                changed = True
    return depths


def term_depth(clause: DefiniteClause, seq: LambdaMuSeq, term: Term,
               type_name: Optional[str] = None) -> float:
    """Depth of a term under a sequence; INFINITE_DEPTH if never produced."""
    depths = term_depths(seq)
    if type_name is not None:
        return depths.get((term, type_name), INFINITE_DEPTH)
    found = [d for (t, _), d in depths.items() if t == term]
    if not found:
        return INFINITE_DEPTH
    return min(found)


def sequence_violations(clause: DefiniteClause, seq: Sequence[LambdaMu], ts: TypeSystem,
                        depth_limit: int, *, open_head_outputs: bool = False) -> list[str]:
    """All constraint violations of `seq` as a λμ-sequence for `clause`.

    Empty list means the sequence is valid.  Constraints follow the formal
    definition: (a) shape, (b) input typing/availability, (c) output typing
    and head-output coverage, (d) constant typing, (e) the depth bound.
    """
    seq = tuple(seq)
    problems: list[str] = []
    if not seq:
        return ["sequence is empty (the empty clause is handled by membership, not here)"]

    lambdas = [lam for lam, _ in seq]
    if len(set(lambdas)) != len(lambdas):
        problems.append("(a)(i) literals are not distinct")
    head_lam, head_mode = seq[0]
    if head_lam != clause.head:
        problems.append("(a)(iii) first element is not the clause head")
    if not head_mode.is_head:
        problems.append("(a)(iii) head literal is not paired with a modeh")
    body_set = clause.body_set()
    if set(lambdas[1:]) != body_set or len(seq) - 1 != len(body_set):
        problems.append("(a)(iv) body elements are not a bijection with the body literals")
    for lam, mode in seq:
        if not matches(mode, lam):
            problems.append(f"(a)(ii) {mode!r} is not a mode-declaration for {lam!r}")
    for lam, mode in seq[1:]:
        if mode.is_head:
            problems.append("(a)(iv) body literal paired with a modeh")
    if problems:
        return problems

    head_io = io_terms(head_lam, head_mode)
    available: set[tuple[Term, str]] = {(t, g) for t, g, _ in head_io.inputs}

    if not _typed(ts, head_io.inputs):
        problems.append("(b)(i) head input term fails its type check")
    if not _typed(ts, head_io.outputs):
        problems.append("(c)(i) head output term fails its type check")
    if not _typed(ts, head_io.constants):
        problems.append("(d) head constant term fails its type check")

    produced: set[tuple[Term, str]] = set()
    for j, (lam, mode) in enumerate(seq[1:], start=2):
        io = io_terms(lam, mode)
        for term, type_name, place in io.inputs:
            if not ts.has_type(term, type_name):
                problems.append(f"(b)(i) {term!r} is not of type {type_name!r} (literal {j})")
            elif (term, type_name) not in available:
                problems.append(
                    f"(b)(ii) input ({term!r},{type_name!r}) of literal {j} not available")
        if not _typed(ts, io.outputs):
            problems.append(f"(c)(i) output term of literal {j} fails its type check")
        if not _typed(ts, io.constants):
            problems.append(f"(d) constant term of literal {j} fails its type check")
        for term, type_name, _ in io.outputs:
            available.add((term, type_name))
            produced.add((term, type_name))

    open_heads: set[tuple[Term, str]] = set()
    for term, type_name, _ in head_io.outputs:
        if (term, type_name) not in produced:
            if open_head_outputs:
                open_heads.add((term, type_name))
            else:
                problems.append(
                    f"(c)(ii) head output ({term!r},{type_name!r}) is produced by no body literal")

    depths = term_depths(seq)
    for lam, mode in seq:
        io = io_terms(lam, mode)
        for term, type_name, _ in io.inputs + io.outputs:
            key = (term, type_name)
            if key in open_heads:
                continue
            if depths.get(key, INFINITE_DEPTH) > depth_limit:
                problems.append(f"(e) depth of ({term!r},{type_name!r}) exceeds {depth_limit}")
                break
    return problems


def is_lambda_mu_sequence(clause: DefiniteClause, seq: Sequence[LambdaMu], ts: TypeSystem,
                          depth_limit: int, *, open_head_outputs: bool = False) -> bool:
    """True iff `seq` is a λμ-sequence for `clause` at the given depth limit."""
    return not sequence_violations(clause, seq, ts, depth_limit,
                                   open_head_outputs=open_head_outputs)


@dataclass(frozen=True)
class EnumerationResult:
    sequences: tuple[LambdaMuSeq, ...]
    exhaustive: bool

    def __iter__(self):
        return iter(self.sequences)

    def __len__(self):
        return len(self.sequences)


def enumerate_lambda_mu_sequences(clause: DefiniteClause, ts: TypeSystem,
                                  modes: Sequence[ModeDecl], depth_limit: int,
                                  cap: int = DEFAULT_SEQUENCE_CAP, *,
                                  open_head_outputs: bool = False) -> EnumerationResult:
    """Backtracking enumeration of λμ-sequences, deterministic order.

    Candidates are explored in clause literal order, minor key mode
    declaration order.  Stops at `cap` sequences; `exhaustive` reports
    whether the search space was fully explored.
    """
    if not is_ground(clause.head) or not all(is_ground(b) for b in clause.body):
        return EnumerationResult((), True)
    head_modes = [m for m in modes if m.is_head and matches(m, clause.head)]
    body = clause.body  # already duplicate-free
    body_modes = [m for m in modes if not m.is_head]
    found: list[LambdaMuSeq] = []
    capped = False

    # cache the completion checks per assignment: different interleavings of
    # the same λ→μ pairing share coverage and depth results
    completion_cache: dict[frozenset, bool] = {}

    def completion_ok(seq: LambdaMuSeq) -> bool:
        key = frozenset(seq)
        if key not in completion_cache:
            probs = sequence_violations(clause, seq, ts, depth_limit,
                                        open_head_outputs=open_head_outputs)
            completion_cache[key] = not probs
        return completion_cache[key]

    def extend(seq: list[LambdaMu], remaining: tuple[Literal, ...],
               available: frozenset[tuple[Term, str]]) -> bool:
        """Returns False when the cap was hit (aborts the search)."""
        nonlocal capped
        if not remaining:
            candidate = tuple(seq)
            if completion_ok(candidate):
                found.append(candidate)
                if len(found) >= cap:
                    capped = True
                    return False
            return True
        for idx, lam in enumerate(remaining):
            for mode in body_modes:
                if not matches(mode, lam):
                    continue
                io = io_terms(lam, mode)
                if not _typed(ts, io.inputs) or not _typed(ts, io.outputs) \
                        or not _typed(ts, io.constants):
                    continue
                if any((t, g) not in available for t, g, _ in io.inputs):
                    continue
                seq.append((lam, mode))
                rest = remaining[:idx] + remaining[idx + 1:]
                grown = available | {(t, g) for t, g, _ in io.outputs}
                if not extend(seq, rest, grown):
                    return False
                seq.pop()
        return True

    for head_mode in head_modes:
        io = io_terms(clause.head, head_mode)
        if not _typed(ts, io.inputs) or not _typed(ts, io.outputs) \
                or not _typed(ts, io.constants):
            continue
        available = frozenset((t, g) for t, g, _ in io.inputs)
        if not extend([(clause.head, head_mode)], body, available):
            break

    return EnumerationResult(tuple(found), not capped)


def in_mode_language(clause: Optional[DefiniteClause], ts: TypeSystem,
                     modes: Sequence[ModeDecl], depth_limit: int) -> bool:
    """Membership in the depth-limited mode language (the empty clause is in)."""
    if clause is None:
        return True
    result = enumerate_lambda_mu_sequences(clause, ts, modes, depth_limit, cap=1)
    return bool(result.sequences)
