"""From clauses to labelled bipartite graphs, and on to numeric features.

Three small settings show the whole translation: the grandparent bottom
clause (no constants), a clause whose single constant is typed two ways
(int and real), and a clause with '#'-marked symbolic and numeric constants.
"""
from pathlib import Path

import botgraph as bg

DATA = Path(__file__).resolve().parents[1] / "data" / "gparent"

# -- the grandparent bottom-graph -------------------------------------------
program = bg.parse_program(DATA.joinpath("bk.pl").read_text())
modes = bg.parse_modes(DATA.joinpath("modes.pl").read_text())
types = bg.TypeSystem.from_program(program, bg.declared_type_names(modes))
example = bg.parse_program(DATA.joinpath("examples.pl").read_text()).clauses[0]
config = bg.SaturationConfig(depth=2, sequence_cap=1000)

graph = bg.bot_graph(program, modes, types, config, example)
print("Grandparent bottom-graph (x-vertices are literal/mode pairs,")
print("y-vertices are term/type pairs; arcs run y->x for inputs, x->y for outputs):\n")
print(graph.dump())

ant = bg.antecedent(graph)
sym = bg.ugraph(ant)
print(f"After Antecedent: {len(ant.x_labels)} x-vertices, "
      f"{len(ant.e_in) + len(ant.e_out)} arcs")
print(f"After UGraph:     {len(sym.e_in) + len(sym.e_out)} arcs (symmetric closure)\n")

vocab = bg.Vocabulary.build(modes, types)
vectorised = bg.transform_graph(graph, vocab)
print(f"Feature width {vocab.width}: |P|={len(vocab.predicates)} predicate slots, "
      f"|Gamma|={len(vocab.types)} type slots, "
      f"{max(len(vocab.hash_terms), 1)} constant slots, 1 numeric slot")
for label, vec in zip(list(vectorised.x_labels) + list(vectorised.y_labels),
                      vectorised.features):
    name = bg.render_literal(label[0]) if isinstance(label[0], bg.Literal) \
        else f"({bg.render_term(label[0])},{label[1]})"
    print(f"    {name:22s} {list(vec)}")

# -- one constant, two typings ------------------------------------------------
print("\nA constant under two numeric typings gets two y-vertices:")
int_real_modes = bg.parse_modes("""
    :- modeh(p(+int)).  :- modeh(p(+real)).
    :- modeb(q(+int)).  :- modeb(q(+real)).
    :- modeb(r(+int)).  :- modeb(r(+real)).
""")
int_real_types = bg.TypeSystem.from_program(bg.parse_program(""),
                                            bg.declared_type_names(int_real_modes))
clause = bg.parse_clause("p(1) :- q(1), r(1).")
print(bg.clause_to_graph(clause, int_real_types, int_real_modes, 1).dump())

# -- '#'-marked constants ----------------------------------------------------
print("'#'-marked places store a marked type and drive the constant one-hots:")
colour_modes = bg.parse_modes("""
    :- modeh(p(+real)).
    :- modeb(q(+real,#colour)).
    :- modeb(r(#colour,#real)).
""")
colour_program = bg.parse_program("colour(white). colour(black).")
colour_types = bg.TypeSystem.from_program(colour_program,
                                          bg.declared_type_names(colour_modes))
clause13 = bg.parse_clause("p(1.0) :- q(1.0,white), r(white,1.0).")
graph13 = bg.clause_to_graph(clause13, colour_types, colour_modes, 1)
print(graph13.dump())
vocab13 = bg.Vocabulary.build(colour_modes, colour_types)
for label, vec in zip(
        list(bg.transform_graph(graph13, vocab13).x_labels)
        + list(bg.transform_graph(graph13, vocab13).y_labels),
        bg.transform_graph(graph13, vocab13).features):
    name = bg.render_literal(label[0]) if isinstance(label[0], bg.Literal) \
        else f"({bg.render_term(label[0])},{label[1]})"
    print(f"    {name:20s} {list(vec)}")
