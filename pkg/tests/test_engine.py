import pytest

import botgraph as bg
from botgraph.engine import Engine, derive
from botgraph.errors import EngineError, UnknownPredicateError


def goal(text):
    return bg.parse_literal(text)


@pytest.fixture(scope="module")
def family():
    return bg.parse_program("""
        parent(X,Y) :- father(X,Y).
        parent(X,Y) :- mother(X,Y).
        father(henry,jane).
        mother(jane,john).
        mother(jane,alice).
    """)


class TestDerive:
    def test_single_solution(self, family):
        result = derive(family, goal("parent(henry,Y)"))
        assert set(result) == {goal("parent(henry,jane)")}
        assert result.complete

    def test_two_solutions(self, family):
        result = derive(family, goal("parent(jane,Y)"))
        assert set(result) == {goal("parent(jane,john)"), goal("parent(jane,alice)")}

    def test_unknown_predicate(self, family):
        with pytest.raises(UnknownPredicateError):
            derive(family, goal("undefined_pred(X)"))

    def test_extra_facts_consulted(self, family):
        result = derive(family, goal("parent(bea,Y)"),
                        extra_facts=(goal("father(bea,kid)"),))
        assert set(result) == {goal("parent(bea,kid)")}

    def test_fully_ground_goal_checks_provability(self, family):
        assert len(derive(family, goal("parent(jane,john)"))) == 1
        assert len(derive(family, goal("parent(jane,henry)"))) == 0

    def test_deterministic_order(self, family):
        first = derive(family, goal("parent(jane,Y)")).solutions
        second = derive(family, goal("parent(jane,Y)")).solutions
        assert first == second


class TestListsAndRecursion:
    def test_member(self):
        program = bg.parse_program("""
            member(X,[X|_]).
            member(X,[_|T]) :- member(X,T).
        """)
        result = derive(program, goal("member(X,[a,b,c])"))
        assert [bg.render_literal(s) for s in result] == [
            "member(a,[a,b,c])", "member(b,[a,b,c])", "member(c,[a,b,c])"]
        assert result.complete

    def test_rule_chains_over_lists(self):
        program = bg.parse_program("""
            shares(L1,L2) :- member(A,L1), member(A,L2).
            member(X,[X|_]).
            member(X,[_|T]) :- member(X,T).
        """)
        assert len(derive(program, goal("shares([a,b],[b,c])"))) == 1
        assert len(derive(program, goal("shares([a,b],[c,d])"))) == 0

    def test_variant_loop_is_cut(self):
        program = bg.parse_program("""
            p(X) :- p(X).
            p(a).
        """)
        result = derive(program, goal("p(X)"))
        assert set(result) == {goal("p(a)")}
        assert not result.complete  # the loop cut is reported

    def test_budget_exhaustion_flags_partial(self):
        clauses = "\n".join(f"edge(n{i},n{i+1})." for i in range(60))
        program = bg.parse_program(clauses + """
            path(X,Y) :- edge(X,Y).
            path(X,Z) :- edge(X,Y), path(Y,Z).
        """)
        result = derive(program, goal("path(n0,X)"), budget=40)
        assert not result.complete
        full = derive(program, goal("path(n0,X)"))
        assert full.complete
        assert len(full) == 60


class TestBuiltins:
    def test_both_bound(self):
        empty = bg.parse_program("")
        assert len(derive(empty, goal("lteq(1,1)"))) == 1
        assert len(derive(empty, goal("lteq(2,1)"))) == 0
        assert len(derive(empty, goal("gteq(3,3)"))) == 1
        assert len(derive(empty, goal("gteq(2.5,3)"))) == 0

    def test_free_output_binds_to_input(self):
        empty = bg.parse_program("")
        result = derive(empty, goal("lteq(1,X)"))
        assert [bg.render_literal(s) for s in result] == ["lteq(1,1)"]
        result = derive(empty, goal("gteq(X,4)"))
        assert [bg.render_literal(s) for s in result] == ["gteq(4,4)"]

    def test_both_free_is_an_error(self):
        with pytest.raises(EngineError):
            derive(bg.parse_program(""), goal("lteq(X,Y)"))

    def test_non_numeric_fails(self):
        assert len(derive(bg.parse_program(""), goal("lteq(a,1)"))) == 0


class TestTabling:
    def test_table_reused_within_engine(self, family):
        engine = Engine(family)
        first = engine.query(goal("parent(jane,Y)"))
        steps_after_first = engine._steps
        second = engine.query(goal("parent(jane,Y)"))
        assert first.solutions == second.solutions
        assert engine._steps == steps_after_first  # answered from the table

    def test_non_ground_answer_rejected(self):
        program = bg.parse_program("open(X,Y) :- base(X).\nbase(a).")
        with pytest.raises(EngineError):
            derive(program, goal("open(A,B)"))
