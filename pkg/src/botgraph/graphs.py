"""Directed labelled bipartite clause-graphs and their transformations.

An x-vertex stands for a (literal, mode) pair, a y-vertex for a (term, type)
pair (the type is '#'-marked when the place is a constant slot).  Arcs run
y→x for input places and x→y for output and constant places.  Vertex ids are
interning indices in insertion order following the λμ-sequences, so two
independently built graphs compare through their labels, not their raw ids.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import LanguageError, ShapeError, SubsetError
from .logic import (
    DefiniteClause,
    Literal,
    PlaceNumber,
    Program,
    Term,
    literal_key,
    render_literal,
    render_term,
    term_at_place,
)
from .modes import CONSTANT, INPUT, ModeDecl, TypeSystem, mode_places, render_mode
from .saturation import BottomClause, SaturationConfig, saturate
from .sequences import (
    DEFAULT_SEQUENCE_CAP,
    LambdaMu,
    LambdaMuSeq,
    enumerate_lambda_mu_sequences,
)

XLabel = tuple[Literal, ModeDecl]
YLabel = tuple[Term, str]


@dataclass(frozen=True, eq=False)
class ClauseGraph:
    """((X, Y, E_in ∪ E_out), ψ) with ψ read off the interned labels."""

    x_labels: tuple[XLabel, ...] = ()
    y_labels: tuple[YLabel, ...] = ()
    e_in: tuple[tuple[int, int], ...] = ()   # (y index, x index), 0-based
    e_out: tuple[tuple[int, int], ...] = ()  # (x index, y index)
    exhaustive: bool = True  # λμ-enumeration metadata, not part of graph equality

    @property
    def is_empty(self) -> bool:
        return not self.x_labels and not self.y_labels

    def edges_in_labels(self) -> frozenset[tuple[YLabel, XLabel]]:
        return frozenset((self.y_labels[y], self.x_labels[x]) for y, x in self.e_in)

    def edges_out_labels(self) -> frozenset[tuple[XLabel, YLabel]]:
        return frozenset((self.x_labels[x], self.y_labels[y]) for x, y in self.e_out)

    def __eq__(self, other):
        if not isinstance(other, ClauseGraph):
            return NotImplemented
        return (frozenset(self.x_labels) == frozenset(other.x_labels)
                and frozenset(self.y_labels) == frozenset(other.y_labels)
                and self.edges_in_labels() == other.edges_in_labels()
                and self.edges_out_labels() == other.edges_out_labels())

    def __hash__(self):
        return hash((frozenset(self.x_labels), frozenset(self.y_labels)))

    def dump(self) -> str:
        """Deterministic text rendering: X, Y, E_in, E_out and ψ."""
        lines = []
        lines.append(f"X ({len(self.x_labels)}):")
        for i, (lam, mode) in enumerate(self.x_labels, start=1):
            lines.append(f"  x{i} = ({render_literal(lam)}, {render_mode(mode)})")
        lines.append(f"Y ({len(self.y_labels)}):")
        for j, (term, type_name) in enumerate(self.y_labels, start=1):
            lines.append(f"  y{j} = ({render_term(term)}, {type_name})")
        lines.append("E_in: " + " ".join(
            f"(y{y + 1},x{x + 1})" for y, x in sorted(self.e_in)))
        lines.append("E_out: " + " ".join(
            f"(x{x + 1},y{y + 1})" for x, y in sorted(self.e_out)))
        if not self.exhaustive:
            lines.append("note: λμ-enumeration was capped; labels may be a subset")
        return "\n".join(lines) + "\n"


EMPTY_GRAPH = ClauseGraph()


@dataclass(frozen=True)
class LitsResult:
    pairs: tuple[LambdaMu, ...]
    exhaustive: bool

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)


def _sequences_for(clause: Optional[DefiniteClause], types: TypeSystem,
                   modes: Sequence[ModeDecl], depth_limit: int, cap: int,
                   sequences: Optional[Sequence[LambdaMuSeq]],
                   open_head_outputs: bool) -> tuple[tuple[LambdaMuSeq, ...], bool]:
    enum = enumerate_lambda_mu_sequences(clause, types, modes, depth_limit, cap=cap,
                                         open_head_outputs=open_head_outputs)
    found = list(enum.sequences)
    if sequences:
        # implementation-identified sequences (e.g. a saturation witness) are
        # unioned in so capped enumeration still covers every literal
        found.extend(tuple(s) for s in sequences)
    if not found:
        raise LanguageError(
            f"clause is not in the depth-{depth_limit} mode language: "
            f"{render_literal(clause.head)} :- ...")
    return tuple(found), enum.exhaustive


def lits(clause: Optional[DefiniteClause], types: TypeSystem, modes: Sequence[ModeDecl],
         depth_limit: int, cap: int = DEFAULT_SEQUENCE_CAP, *,
         sequences: Optional[Sequence[LambdaMuSeq]] = None,
         open_head_outputs: bool = False) -> LitsResult:
    """Union of (λ, μ) pairs over the clause's λμ-sequences (∅ for the empty clause)."""
    if clause is None:
        return LitsResult((), True)
    seqs, exhaustive = _sequences_for(clause, types, modes, depth_limit, cap,
                                      sequences, open_head_outputs)
    pairs: dict[LambdaMu, None] = {}
    for seq in seqs:
        for pair in seq:
            pairs.setdefault(pair)
    return LitsResult(tuple(pairs), exhaustive)


def terms_set(clause: Optional[DefiniteClause], types: TypeSystem, modes: Sequence[ModeDecl],
              depth_limit: int, cap: int = DEFAULT_SEQUENCE_CAP, *,
              sequences: Optional[Sequence[LambdaMuSeq]] = None,
              open_head_outputs: bool = False) -> tuple[tuple[Literal, ModeDecl, PlaceNumber], ...]:
    """Every (λ, μ, π) with a known ModeType, for every Lits pair."""
    result = lits(clause, types, modes, depth_limit, cap,
                  sequences=sequences, open_head_outputs=open_head_outputs)
    out = []
    for lam, mode in result:
        for place, _, _ in mode_places(mode):
            out.append((lam, mode, place))
    return tuple(out)


def term_type(triple: tuple[Literal, ModeDecl, PlaceNumber]) -> YLabel:
    """(term at the place, its declared type; '#'-marked for constant slots)."""
    lam, mode, place = triple
    known = {p: (role, g) for p, role, g in mode_places(mode)}
    if place not in known:
        raise LanguageError(f"place {place} of {render_mode(mode)} has no known ModeType")
    role, type_name = known[place]
    term = term_at_place(lam, place)
    return (term, "#" + type_name if role == CONSTANT else type_name)


def clause_to_graph(clause: Optional[DefiniteClause], types: TypeSystem,
                    modes: Sequence[ModeDecl], depth_limit: int,
                    cap: int = DEFAULT_SEQUENCE_CAP, *,
                    sequences: Optional[Sequence[LambdaMuSeq]] = None,
                    open_head_outputs: bool = False) -> ClauseGraph:
    """The labelled bipartite graph of a clause (the empty clause maps to CG_⊤)."""
    if clause is None:
        return EMPTY_GRAPH
    pairs = lits(clause, types, modes, depth_limit, cap,
                 sequences=sequences, open_head_outputs=open_head_outputs)

    x_index: dict[XLabel, int] = {}
    y_index: dict[YLabel, int] = {}
    e_in: dict[tuple[int, int], None] = {}
    e_out: dict[tuple[int, int], None] = {}
    for pair in pairs:
        xi = x_index.setdefault(pair, len(x_index))
        lam, mode = pair
        for place, role, type_name in mode_places(mode):
            label = term_type((lam, mode, place))
            yj = y_index.setdefault(label, len(y_index))
            if role == INPUT:
                e_in.setdefault((yj, xi))
            else:
                e_out.setdefault((xi, yj))
    return ClauseGraph(tuple(x_index), tuple(y_index), tuple(e_in), tuple(e_out),
                       exhaustive=pairs.exhaustive)


def graph_to_clause(graph: ClauseGraph) -> Optional[DefiniteClause]:
    """Left inverse of clause_to_graph; CG_⊤ maps back to the empty clause (None)."""
    if graph.is_empty:
        return None
    heads = [lam for lam, mode in graph.x_labels if mode.is_head]
    body = [lam for lam, mode in graph.x_labels if not mode.is_head]
    heads = list(dict.fromkeys(heads))
    if len(heads) != 1:
        raise ShapeError(f"a definite clause needs exactly one head vertex, found {len(heads)}")
    return DefiniteClause(heads[0], tuple(dict.fromkeys(body)))


def cg_leq(left: ClauseGraph, right: ClauseGraph) -> bool:
    """The ≤_cg order: componentwise subset, compared by vertex labels."""
    return (frozenset(left.x_labels) <= frozenset(right.x_labels)
            and frozenset(left.y_labels) <= frozenset(right.y_labels)
            and left.edges_in_labels() <= right.edges_in_labels()
            and left.edges_out_labels() <= right.edges_out_labels())


def bottom_clause_graph(bottom: Optional[BottomClause], types: TypeSystem,
                        modes: Sequence[ModeDecl], depth_limit: int,
                        cap: int = DEFAULT_SEQUENCE_CAP) -> ClauseGraph:
    """Graph of an already-computed bottom clause (its witness is unioned in)."""
    if bottom is None:
        return EMPTY_GRAPH
    return clause_to_graph(bottom.clause, types, modes, depth_limit, cap,
                           sequences=[bottom.witness], open_head_outputs=True)


def bot_graph(program: Program, modes: Sequence[ModeDecl], types: TypeSystem,
              config: SaturationConfig, example: DefiniteClause) -> ClauseGraph:
    """Saturate an example and build its bottom-graph (CG_⊤ when saturation is empty)."""
    bottom = saturate(program, modes, types, config, example)
    return bottom_clause_graph(bottom, types, modes, config.depth, config.sequence_cap)


def antecedent(graph: ClauseGraph) -> ClauseGraph:
    """Drop head-mode x-vertices, their arcs, and y-vertices left isolated."""
    keep_x = [i for i, (_, mode) in enumerate(graph.x_labels) if not mode.is_head]
    x_map = {old: new for new, old in enumerate(keep_x)}
    e_in = [(y, x) for y, x in graph.e_in if x in x_map]
    e_out = [(x, y) for x, y in graph.e_out if x in x_map]
    touched = {y for y, _ in e_in} | {y for _, y in e_out}
    keep_y = [j for j in range(len(graph.y_labels)) if j in touched]
    y_map = {old: new for new, old in enumerate(keep_y)}
    return ClauseGraph(
        tuple(graph.x_labels[i] for i in keep_x),
        tuple(graph.y_labels[j] for j in keep_y),
        tuple((y_map[y], x_map[x]) for y, x in e_in),
        tuple((x_map[x], y_map[y]) for x, y in e_out),
        exhaustive=graph.exhaustive,
    )


def ugraph(graph: ClauseGraph) -> ClauseGraph:
    """Symmetric closure of the arc set; vertices and labels unchanged."""
    e_in = dict.fromkeys(graph.e_in)
    e_out = dict.fromkeys(graph.e_out)
    for y, x in graph.e_in:
        e_out.setdefault((x, y))
    for x, y in graph.e_out:
        e_in.setdefault((y, x))
    return ClauseGraph(graph.x_labels, graph.y_labels, tuple(e_in), tuple(e_out),
                       exhaustive=graph.exhaustive)


def explanation_subgraph(bottom_graph: ClauseGraph, hypothesis: DefiniteClause) -> ClauseGraph:
    """Subgraph of a bottom-graph induced by a hypothesis instance Cθ ⊆ ⊥.

    The result is ≤_cg the bottom-graph and graph_to_clause maps it back to
    the hypothesis, the two checkable facts that make Cθ a clausal
    explanation candidate.
    """
    bottom = graph_to_clause(bottom_graph)
    if bottom is None:
        raise SubsetError("the empty bottom-graph explains nothing")
    if hypothesis.head != bottom.head or not hypothesis.body_set() <= bottom.body_set():
        missing = sorted(hypothesis.body_set() - bottom.body_set(), key=literal_key)
        what = ", ".join(render_literal(l) for l in missing) or "the head"
        raise SubsetError(f"hypothesis is not a subset of the bottom clause ({what})")
    wanted = hypothesis.literals
    keep_x = [i for i, (lam, _) in enumerate(bottom_graph.x_labels) if lam in wanted]
    x_map = {old: new for new, old in enumerate(keep_x)}
    e_in = [(y, x) for y, x in bottom_graph.e_in if x in x_map]
    e_out = [(x, y) for x, y in bottom_graph.e_out if x in x_map]
    touched = {y for y, _ in e_in} | {y for _, y in e_out}
    keep_y = [j for j in range(len(bottom_graph.y_labels)) if j in touched]
    y_map = {old: new for new, old in enumerate(keep_y)}
    return ClauseGraph(
        tuple(bottom_graph.x_labels[i] for i in keep_x),
        tuple(bottom_graph.y_labels[j] for j in keep_y),
        tuple((y_map[y], x_map[x]) for y, x in e_in),
        tuple((x_map[x], y_map[y]) for x, y in e_out),
        exhaustive=bottom_graph.exhaustive,
    )
