"""Walk through bottom-clause saturation on the grandparent example.

The background knowledge defines parent/2 over father/2 and mother/2 facts,
plus the person type.  One labelled example says henry is a grandparent of
john, and carries two facts of its own in its body.  Saturation extends the
example with everything derivable about its terms, one depth layer at a time.
"""
from pathlib import Path

import botgraph as bg

DATA = Path(__file__).resolve().parents[1] / "data" / "gparent"

program = bg.parse_program(DATA.joinpath("bk.pl").read_text(), source="bk.pl")
modes = bg.parse_modes(DATA.joinpath("modes.pl").read_text())
types = bg.TypeSystem.from_program(program, bg.declared_type_names(modes))
example = bg.parse_program(DATA.joinpath("examples.pl").read_text()).clauses[0]

print("Background knowledge:")
for clause in program.clauses:
    print("   ", bg.render_clause(clause))
print("\nModes:")
for mode in modes:
    print("   ", bg.render_mode(mode))
print("\nExample:", bg.render_clause(example))

for depth in (0, 1, 2):
    bottom = bg.saturate(program, modes, types,
                         bg.SaturationConfig(depth=depth), example)
    print(f"\nBottom clause at depth {depth}:")
    print("   ", bg.render_clause(bottom.clause, sort_body=True))

# The depth of each term is read off the witness sequence: head inputs sit at
# depth 0, everything else is one more than its cheapest producer.
bottom = bg.saturate(program, modes, types, bg.SaturationConfig(depth=2), example)
depths = bg.term_depths(bottom.witness)
print("\nTerm depths in the depth-2 bottom clause:")
for name in ("henry", "jane", "john", "alice"):
    print(f"    {name}: {depths[(bg.Constant(name), 'person')]:.0f}")

print("\nWitness sequence (insertion order):")
for literal, mode in bottom.witness:
    print(f"    ({bg.render_literal(literal)}, {bg.render_mode(mode)})")
