import time

import pytest

import botgraph as bg
from botgraph.engine import Engine


GPARENT_D1 = "gparent(henry,john) :- father(henry,jane), parent(henry,jane)."
GPARENT_D2 = ("gparent(henry,john) :- father(henry,jane), mother(jane,john), "
              "mother(jane,alice), parent(henry,jane), parent(jane,john), "
              "parent(jane,alice).")


class TestGoldenSaturation:
    def test_depth_one(self, gparent, gparent_example):
        bottom = gparent.saturate(bg.render_clause(gparent_example), depth=1)
        assert bg.clause_equal(bottom.clause, bg.parse_clause(GPARENT_D1))

    def test_depth_two(self, gparent, gparent_example):
        bottom = gparent.saturate(bg.render_clause(gparent_example), depth=2)
        assert bg.clause_equal(bottom.clause, bg.parse_clause(GPARENT_D2))

    def test_runtime_under_one_second(self, gparent, gparent_example):
        start = time.perf_counter()
        gparent.saturate(bg.render_clause(gparent_example), depth=1)
        gparent.saturate(bg.render_clause(gparent_example), depth=2)
        assert time.perf_counter() - start < 1.0

    def test_no_matching_modeh_returns_none(self, gparent):
        assert gparent.saturate("unrelated(henry).", depth=2) is None

    def test_depth_zero_is_head_only(self, gparent, gparent_example):
        bottom = gparent.saturate(bg.render_clause(gparent_example), depth=0)
        assert bottom.clause.body == ()


class TestWitness:
    def test_witness_validates_with_open_head_outputs(self, gparent, gparent_example):
        for depth in (1, 2):
            bottom = gparent.saturate(bg.render_clause(gparent_example), depth=depth)
            assert bg.is_lambda_mu_sequence(bottom.clause, bottom.witness, gparent.types,
                                            depth, open_head_outputs=True)

    def test_depth_two_witness_is_strictly_valid(self, gparent, gparent_example):
        bottom = gparent.saturate(bg.render_clause(gparent_example), depth=2)
        assert bg.is_lambda_mu_sequence(bottom.clause, bottom.witness, gparent.types, 2)

    def test_language_membership_at_depth_two(self, gparent, gparent_example):
        bottom = gparent.saturate(bg.render_clause(gparent_example), depth=2)
        assert bg.in_mode_language(bottom.clause, gparent.types, gparent.modes, 2)

    def test_provenance_depths(self, gparent, gparent_example):
        bottom = gparent.saturate(bg.render_clause(gparent_example), depth=2)
        assert bottom.depth_of(bg.parse_literal("father(henry,jane)")) == 1
        assert bottom.depth_of(bg.parse_literal("mother(jane,john)")) == 2


class TestSoundness:
    def test_every_body_literal_reproves(self, gparent, gparent_example):
        bottom = gparent.saturate(bg.render_clause(gparent_example), depth=2)
        engine = Engine(gparent.program, extra_facts=gparent_example.body)
        for literal in bottom.clause.body:
            assert len(engine.query(literal)) == 1

    def test_entailment_of_the_example_head(self, gparent, gparent_example):
        # every body literal of bottom proves from B ∪ body(e), so one
        # resolution step with the bottom clause itself derives e's head
        bottom = gparent.saturate(bg.render_clause(gparent_example), depth=2)
        engine = Engine(gparent.program, extra_facts=gparent_example.body)
        assert all(len(engine.query(b)) == 1 for b in bottom.clause.body)
        assert bottom.clause.head == gparent_example.head


class TestMonotonicityAndDeterminism:
    def test_body_grows_with_depth(self, gparent, gparent_example):
        text = bg.render_clause(gparent_example)
        previous = set()
        for depth in (0, 1, 2, 3):
            bottom = gparent.saturate(text, depth=depth)
            current = bottom.clause.body_set()
            assert previous <= current
            previous = current

    def test_two_runs_identical(self, gparent, gparent_example):
        text = bg.render_clause(gparent_example)
        one = gparent.saturate(text, depth=2)
        two = gparent.saturate(text, depth=2)
        assert bg.clause_equal(one.clause, two.clause)
        assert one.witness == two.witness

    def test_depth_three_adds_nothing_here(self, gparent, gparent_example):
        text = bg.render_clause(gparent_example)
        assert bg.clause_equal(gparent.saturate(text, depth=3).clause,
                               gparent.saturate(text, depth=2).clause)


class TestRecallAndCaps:
    def test_recall_bounds_answers_per_binding(self, gparent, gparent_example):
        modes = bg.parse_modes("""
            :- modeh(gparent(+person,-person)).
            :- modeb(1,parent(+person,-person)).
        """)
        cfg = bg.SaturationConfig(depth=2)
        bottom = bg.saturate(gparent.program, modes, gparent.types, cfg, gparent_example)
        by_first = {}
        for lit in bottom.clause.body:
            by_first.setdefault(lit.args[0], []).append(lit)
        assert all(len(v) == 1 for v in by_first.values())

    def test_default_recall_from_config(self, gparent, gparent_example):
        bottom = gparent.saturate(bg.render_clause(gparent_example), depth=2,
                                  default_recall=1)
        preds = {}
        for lit in bottom.clause.body:
            preds.setdefault((lit.predicate, lit.args[0]), []).append(lit)
        assert all(len(v) == 1 for v in preds.values())

    def test_literal_cap_flags_incomplete(self, gparent, gparent_example):
        bottom = gparent.saturate(bg.render_clause(gparent_example), depth=2,
                                  max_literals_per_depth=1)
        assert not bottom.complete

    def test_budget_exhaustion_flags_incomplete(self, gparent, gparent_example):
        bottom = gparent.saturate(bg.render_clause(gparent_example), depth=2, budget=3)
        assert not bottom.complete

    def test_ground_example_required(self, gparent):
        with pytest.raises(ValueError):
            gparent.saturate("gparent(henry,X) :- father(henry,X).", depth=1)


class TestStructuredModeTerms:
    """Modes whose schema nests roles inside a function symbol."""

    BK = """
    wraps(box(a),item(u)).
    wraps(box(b),item(v)).
    thing(a). thing(b). load(u). load(v).
    """
    MODES = """
    :- modeh(start(+thing)).
    :- modeb(wraps(box(+thing),item(-load))).
    """

    def setup_method(self):
        self.program = bg.parse_program(self.BK)
        self.modes = bg.parse_modes(self.MODES)
        self.types = bg.TypeSystem.from_program(self.program,
                                                bg.declared_type_names(self.modes))

    def test_saturation_queries_through_structure(self):
        cfg = bg.SaturationConfig(depth=1)
        bottom = bg.saturate(self.program, self.modes, self.types, cfg,
                             bg.parse_clause("start(a)."))
        assert bg.clause_equal(bottom.clause,
                               bg.parse_clause("start(a) :- wraps(box(a),item(u))."))

    def test_sequence_and_graph_over_structured_places(self):
        cfg = bg.SaturationConfig(depth=1)
        bottom = bg.saturate(self.program, self.modes, self.types, cfg,
                             bg.parse_clause("start(a)."))
        assert bg.is_lambda_mu_sequence(bottom.clause, bottom.witness, self.types, 1,
                                        open_head_outputs=True)
        graph = bg.bottom_clause_graph(bottom, self.types, self.modes, 1)
        labels = {(bg.render_term(t), g) for t, g in graph.y_labels}
        assert labels == {("a", "thing"), ("u", "load")}

    def test_place_addressing_is_positional(self):
        # place-numbers address positions, not functors: crate(a) still has a
        # term at place (1,1), but a plain constant has no such position
        (mode,) = [m for m in self.modes if not m.is_head]
        io = bg.io_terms(bg.parse_literal("wraps(crate(a),item(u))"), mode)
        assert [(bg.render_term(t), g, p) for t, g, p in io.inputs] == \
            [("a", "thing", (1, 1))]
        io_flat = bg.io_terms(bg.parse_literal("wraps(plain,item(u))"), mode)
        assert io_flat.inputs == () and len(io_flat.outputs) == 1


class TestExampleBodyFeedsBackground:
    def test_molecule_structures(self, molecules):
        cfg = bg.SaturationConfig(depth=2)
        m1 = molecules.examples[0]
        bottom = bg.saturate(molecules.program, molecules.modes, molecules.types, cfg, m1)
        preds = {lit.predicate for lit in bottom.clause.body}
        assert {"bond", "has_struc", "connected", "lteq", "gteq"} <= preds
        assert bottom.complete

    def test_fused_pair_found(self, molecules):
        cfg = bg.SaturationConfig(depth=2)
        m2 = molecules.examples[1]
        bottom = bg.saturate(molecules.program, molecules.modes, molecules.types, cfg, m2)
        assert any(lit.predicate == "fused" for lit in bottom.clause.body)

    def test_same_numeral_under_two_types(self, molecules):
        # atom id 1 (type atomid) and length 1 (type int) are one term, two types
        cfg = bg.SaturationConfig(depth=2)
        bottom = bg.saturate(molecules.program, molecules.modes, molecules.types, cfg,
                             molecules.examples[0])
        graph = bg.bottom_clause_graph(bottom, molecules.types, molecules.modes, 2)
        one = bg.Constant("1", numeric=True)
        types_of_one = {g for t, g in graph.y_labels if t == one}
        assert "atomid" in types_of_one and "int" in types_of_one
