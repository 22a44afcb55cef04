import logging

import pytest

import botgraph as bg
from botgraph.errors import ParseError
from botgraph.modes import INPUT, OUTPUT, CONSTANT


class TestParseModes:
    def test_head_mode(self):
        (mode,) = bg.parse_modes(":- modeh(gparent(+person,-person)).")
        assert mode.is_head and mode.arity == 2 and mode.recall is None

    def test_recall_star_and_integer(self):
        modes = bg.parse_modes("""
            :- modeb(*,has_struc(+mol,-atomids,-length,#structype)).
            :- modeb(3,parent(+person,-person)).
        """)
        assert modes[0].recall is None
        assert modes[1].recall == 3

    def test_declaration_order_preserved(self):
        modes = bg.parse_modes(":- modeb(b(+t)).\n:- modeh(a(+t)).\n:- modeb(c(+t)).")
        assert [m.predicate for m in modes] == ["b", "a", "c"]

    def test_structured_mode_term(self):
        (mode,) = bg.parse_modes(":- modeb(mem(+t,cons(+t,-t))).")
        assert isinstance(mode.args[1], bg.StructuredArg)

    def test_bad_role_marker(self):
        with pytest.raises(ParseError):
            bg.parse_modes(":- modeb(p(~person)).")

    def test_malformed_schema(self):
        with pytest.raises(ParseError):
            bg.parse_modes(":- modeb(p(person)).")
        with pytest.raises(ParseError):
            bg.parse_modes(":- modeq(p(+person)).")


class TestModeType:
    def test_simple_places(self):
        (mode,) = bg.parse_modes(":- modeb(father(+person,-person)).")
        assert bg.mode_type(mode, (1,)) == (INPUT, "person")
        assert bg.mode_type(mode, (2,)) == (OUTPUT, "person")

    def test_constant_real(self):
        (mode,) = bg.parse_modes(":- modeb(r(#colour,#real)).")
        assert bg.mode_type(mode, (2,)) == (CONSTANT, "real")

    def test_unknown_out_of_range(self):
        (mode,) = bg.parse_modes(":- modeb(father(+person,-person)).")
        assert bg.mode_type(mode, (3,)) is None
        assert bg.mode_type(mode, ()) is None

    def test_unknown_interior_of_structured(self):
        (mode,) = bg.parse_modes(":- modeb(mem(+t,cons(+t,-t))).")
        assert bg.mode_type(mode, (2,)) is None  # the structured node itself
        assert bg.mode_type(mode, (2, 1)) == (INPUT, "t")
        assert bg.mode_type(mode, (2, 2)) == (OUTPUT, "t")


class TestMatches:
    def test_match(self):
        (mode,) = bg.parse_modes(":- modeb(parent(+person,-person)).")
        assert bg.matches(mode, bg.parse_literal("parent(jane,john)"))

    def test_arity_mismatch(self):
        (mode,) = bg.parse_modes(":- modeb(parent(+person,-person)).")
        assert not bg.matches(mode, bg.parse_literal("parent(a,b,c)"))

    def test_predicate_mismatch(self):
        (mode,) = bg.parse_modes(":- modeh(p(+int)).")
        assert not bg.matches(mode, bg.parse_literal("q(1)"))


class TestIOTerms:
    def test_partition(self):
        (mode,) = bg.parse_modes(":- modeb(father(+person,-person)).")
        io = bg.io_terms(bg.parse_literal("father(henry,jane)"), mode)
        assert io.inputs == ((bg.Constant("henry"), "person", (1,)),)
        assert io.outputs == ((bg.Constant("jane"), "person", (2,)),)
        assert io.constants == ()

    def test_constants(self):
        (mode,) = bg.parse_modes(":- modeb(q(+real,#colour)).")
        io = bg.io_terms(bg.parse_literal("q(1.0,white)"), mode)
        assert io.inputs == ((bg.Constant("1.0", numeric=True), "real", (1,)),)
        assert io.constants == ((bg.Constant("white"), "colour", (2,)),)

    def test_zero_arity(self):
        (mode,) = bg.parse_modes(":- modeh(p).")
        io = bg.io_terms(bg.parse_literal("p"), mode)
        assert io.inputs == io.outputs == io.constants == ()


class TestTypeSystem:
    def test_fact_membership(self):
        ts = bg.TypeSystem.from_program(bg.parse_program("person(jane)."))
        assert ts.has_type(bg.Constant("jane"), "person")
        assert not ts.has_type(bg.Constant("bob"), "person")

    def test_builtin_numeric(self):
        ts = bg.TypeSystem.from_program(bg.parse_program(""))
        one = bg.Constant("1", numeric=True)
        one_point = bg.Constant("1.0", numeric=True)
        assert ts.has_type(one, "real") and ts.has_type(one, "int")
        assert ts.has_type(one_point, "real") and not ts.has_type(one_point, "int")
        assert not ts.has_type(bg.Constant("jane"), "real")

    def test_empty_type_warns(self, caplog):
        with caplog.at_level(logging.WARNING):
            bg.TypeSystem.from_program(bg.parse_program(""), declared=("ghost",))
        assert any("ghost" in r.message for r in caplog.records)

    def test_terms_of_declaration_order(self):
        ts = bg.TypeSystem.from_program(bg.parse_program("colour(white). colour(black)."))
        assert [t.name for t in ts.terms_of("colour")] == ["white", "black"]
