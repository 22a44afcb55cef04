import math

import botgraph as bg


def pairs(setup, text_pairs):
    by_repr = {bg.render_mode(m): m for m in setup.modes}
    out = []
    for lit_text, mode_text in text_pairs:
        out.append((bg.parse_literal(lit_text), by_repr[mode_text]))
    return tuple(out)


class TestExample7:
    """p(1) :- q(1), r(1) under int/real modes: exactly four sequences."""

    def test_enumeration_is_exactly_four(self, int_real):
        clause = bg.parse_clause("p(1) :- q(1), r(1).")
        result = bg.enumerate_lambda_mu_sequences(clause, int_real.types, int_real.modes, 1)
        assert result.exhaustive
        assert len(result.sequences) == 4
        rendered = {
            tuple((bg.render_literal(l), bg.render_mode(m)) for l, m in seq)
            for seq in result.sequences
        }
        assert rendered == {
            (("p(1)", "modeh(*,p(+int))"), ("q(1)", "modeb(*,q(+int))"),
             ("r(1)", "modeb(*,r(+int))")),
            (("p(1)", "modeh(*,p(+int))"), ("r(1)", "modeb(*,r(+int))"),
             ("q(1)", "modeb(*,q(+int))")),
            (("p(1)", "modeh(*,p(+real))"), ("q(1)", "modeb(*,q(+real))"),
             ("r(1)", "modeb(*,r(+real))")),
            (("p(1)", "modeh(*,p(+real))"), ("r(1)", "modeb(*,r(+real))"),
             ("q(1)", "modeb(*,q(+real))")),
        }

    def test_mixed_type_sequences_rejected(self, int_real):
        clause = bg.parse_clause("p(1) :- q(1), r(1).")
        bad1 = pairs(int_real, [("p(1)", "modeh(*,p(+int))"),
                                ("q(1)", "modeb(*,q(+real))"),
                                ("r(1)", "modeb(*,r(+int))")])
        bad2 = pairs(int_real, [("p(1)", "modeh(*,p(+real))"),
                                ("q(1)", "modeb(*,q(+real))"),
                                ("r(1)", "modeb(*,r(+int))")])
        for bad in (bad1, bad2):
            assert not bg.is_lambda_mu_sequence(clause, bad, int_real.types, 1)

    def test_every_emitted_sequence_validates(self, int_real):
        clause = bg.parse_clause("p(1) :- q(1), r(1).")
        result = bg.enumerate_lambda_mu_sequences(clause, int_real.types, int_real.modes, 1)
        for seq in result:
            assert bg.is_lambda_mu_sequence(clause, seq, int_real.types, 1)


class TestGparentSequences:
    def test_witness_of_example8_is_valid(self, gparent, gparent_example):
        bottom = gparent.saturate(
            "gparent(henry,john) :- father(henry,jane), mother(jane,john).", depth=2)
        # the paper's listing order: father, mother x2, parent x3
        listing = pairs(gparent, [
            ("gparent(henry,john)", "modeh(*,gparent(+person,-person))"),
            ("father(henry,jane)", "modeb(*,father(+person,-person))"),
            ("mother(jane,john)", "modeb(*,mother(+person,-person))"),
            ("mother(jane,alice)", "modeb(*,mother(+person,-person))"),
            ("parent(henry,jane)", "modeb(*,parent(+person,-person))"),
            ("parent(jane,john)", "modeb(*,parent(+person,-person))"),
            ("parent(jane,alice)", "modeb(*,parent(+person,-person))"),
        ])
        assert bg.is_lambda_mu_sequence(bottom.clause, listing, gparent.types, 2)

    def test_enumeration_cross_checked_with_validator(self, gparent):
        bottom = gparent.saturate(
            "gparent(henry,john) :- father(henry,jane), mother(jane,john).", depth=2)
        result = bg.enumerate_lambda_mu_sequences(
            bottom.clause, gparent.types, gparent.modes, 2, cap=10)
        assert len(result.sequences) >= 1
        for seq in result:
            assert bg.is_lambda_mu_sequence(bottom.clause, seq, gparent.types, 2)

    def test_exhaustive_count_is_240(self, gparent):
        # two producers of jane can open the body; the other five literals follow freely
        bottom = gparent.saturate(
            "gparent(henry,john) :- father(henry,jane), mother(jane,john).", depth=2)
        result = bg.enumerate_lambda_mu_sequences(
            bottom.clause, gparent.types, gparent.modes, 2, cap=100_000)
        assert result.exhaustive
        assert len(result.sequences) == 240

    def test_cap_and_flag(self, gparent):
        bottom = gparent.saturate(
            "gparent(henry,john) :- father(henry,jane), mother(jane,john).", depth=2)
        result = bg.enumerate_lambda_mu_sequences(
            bottom.clause, gparent.types, gparent.modes, 2, cap=10)
        assert len(result.sequences) == 10 and not result.exhaustive


class TestDepth:
    def test_golden_depths(self, gparent):
        bottom = gparent.saturate(
            "gparent(henry,john) :- father(henry,jane), mother(jane,john).", depth=2)
        depths = bg.term_depths(bottom.witness)
        got = {name: depths[(bg.Constant(name), "person")]
               for name in ("henry", "jane", "john", "alice")}
        assert got == {"henry": 0, "jane": 1, "john": 2, "alice": 2}

    def test_head_inputs_are_zero(self, int_real):
        clause = bg.parse_clause("p(1) :- q(1).")
        seq = pairs(int_real, [("p(1)", "modeh(*,p(+int))"), ("q(1)", "modeb(*,q(+int))")])
        assert bg.term_depth(clause, seq, bg.Constant("1", numeric=True), "int") == 0

    def test_never_produced_term_is_infinite(self, gparent):
        clause = bg.parse_clause("gparent(henry,john) :- parent(henry,jane).")
        seq = pairs(gparent, [
            ("gparent(henry,john)", "modeh(*,gparent(+person,-person))"),
            ("parent(henry,jane)", "modeb(*,parent(+person,-person))"),
        ])
        assert bg.term_depth(clause, seq, bg.Constant("john"), "person") == math.inf


class TestMembership:
    def test_empty_clause_is_in(self, gparent):
        assert bg.in_mode_language(None, gparent.types, gparent.modes, 2)

    def test_chain_clause_in_language(self, gparent):
        clause = bg.parse_clause("gparent(henry,john) :- parent(henry,jane), parent(jane,john).")
        assert bg.in_mode_language(clause, gparent.types, gparent.modes, 2)

    def test_unavailable_input_not_in_language(self, gparent):
        # Example 4(e) pattern: the first body argument never appears before
        clause = bg.parse_clause("gparent(henry,john) :- parent(john,alice).")
        assert not bg.in_mode_language(clause, gparent.types, gparent.modes, 2)

    def test_unmatched_body_literal_gives_no_sequences(self, gparent):
        clause = bg.parse_clause("gparent(henry,john) :- parent(henry,jane), zap(jane).")
        result = bg.enumerate_lambda_mu_sequences(clause, gparent.types, gparent.modes, 2)
        assert len(result.sequences) == 0

    def test_depth_bound_excludes_long_chains(self, gparent):
        clause = bg.parse_clause(
            "gparent(henry,john) :- parent(henry,jane), parent(jane,john), parent(john,alice).")
        assert bg.in_mode_language(clause, gparent.types, gparent.modes, 3)
        assert not bg.in_mode_language(clause, gparent.types, gparent.modes, 2)


class TestInvariants:
    def test_body_permutation_leaves_sequence_set_invariant(self, gparent):
        base = bg.parse_clause(
            "gparent(henry,john) :- father(henry,jane), parent(jane,john), mother(jane,alice).")
        permuted = bg.DefiniteClause(base.head, tuple(reversed(base.body)))
        one = bg.enumerate_lambda_mu_sequences(base, gparent.types, gparent.modes, 2, cap=10_000)
        two = bg.enumerate_lambda_mu_sequences(permuted, gparent.types, gparent.modes, 2,
                                               cap=10_000)
        assert one.exhaustive and two.exhaustive
        assert set(one.sequences) == set(two.sequences)

    def test_depth_monotonicity(self, gparent):
        clause = bg.parse_clause("gparent(henry,john) :- parent(henry,jane), parent(jane,john).")
        result = bg.enumerate_lambda_mu_sequences(clause, gparent.types, gparent.modes, 2,
                                                  cap=10_000)
        for seq in result:
            assert bg.is_lambda_mu_sequence(clause, seq, gparent.types, 3)

    def test_type_discipline(self, gparent):
        result = bg.enumerate_lambda_mu_sequences(
            bg.parse_clause("gparent(henry,john) :- parent(henry,jane), parent(jane,john)."),
            gparent.types, gparent.modes, 2)
        for seq in result:
            for lam, mode in seq:
                io = bg.io_terms(lam, mode)
                for term, type_name, _ in io.inputs + io.outputs + io.constants:
                    assert gparent.types.has_type(term, type_name)
