"""Explanation subgraphs: a hypothesis instance inside a bottom-graph.

Any clause whose literals are a subset of a bottom clause (and which is
itself in the mode language) induces a subgraph of the bottom-graph.  That
subgraph sits below the bottom-graph in the containment order and maps back
to exactly the hypothesis, which is what makes it a faithful graphical
rendering of a clausal explanation for the example.
"""
from pathlib import Path

import botgraph as bg

DATA = Path(__file__).resolve().parents[1] / "data" / "gparent"

program = bg.parse_program(DATA.joinpath("bk.pl").read_text())
modes = bg.parse_modes(DATA.joinpath("modes.pl").read_text())
types = bg.TypeSystem.from_program(program, bg.declared_type_names(modes))
example = bg.parse_program(DATA.joinpath("examples.pl").read_text()).clauses[0]
config = bg.SaturationConfig(depth=2, sequence_cap=1000)

bottom_graph = bg.bot_graph(program, modes, types, config, example)
print(f"Bottom-graph: {len(bottom_graph.x_labels)} x-vertices, "
      f"{len(bottom_graph.y_labels)} y-vertices")

hypothesis = bg.parse_clause(
    "gparent(henry,john) :- parent(henry,jane), parent(jane,john).")
print("\nHypothesis instance:", bg.render_clause(hypothesis))

subgraph = bg.explanation_subgraph(bottom_graph, hypothesis)
print("\nInduced subgraph:")
print(subgraph.dump())

print("Checks:")
print("    subgraph <=cg bottom-graph:", bg.cg_leq(subgraph, bottom_graph))
print("    maps back to the hypothesis:",
      bg.clause_equal(bg.graph_to_clause(subgraph), hypothesis))

# the whole bottom clause is its own (trivial) explanation
whole = bg.explanation_subgraph(bottom_graph, bg.graph_to_clause(bottom_graph))
print("    whole bottom clause gives the whole graph:", whole == bottom_graph)

# a clause that is not a subset of the bottom clause is rejected
try:
    bg.explanation_subgraph(bottom_graph,
                            bg.parse_clause("gparent(henry,john) :- father(bob,ann)."))
except bg.SubsetError as err:
    print("    non-subset rejected:", err)
