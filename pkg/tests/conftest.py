from pathlib import Path

import pytest

import botgraph as bg

DATA = Path(__file__).resolve().parents[1] / "data"

GPARENT_BK = """
parent(X,Y) :- father(X,Y).
parent(X,Y) :- mother(X,Y).
mother(jane,alice).
person(henry). person(john). person(jane). person(alice).
"""

GPARENT_MODES = """
:- modeh(gparent(+person,-person)).
:- modeb(father(+person,-person)).
:- modeb(mother(+person,-person)).
:- modeb(parent(+person,-person)).
"""

GPARENT_EXAMPLE = "gparent(henry,john) :- father(henry,jane), mother(jane,john)."


class Setup:
    """A parsed program/modes/types bundle plus convenience helpers."""

    def __init__(self, bk: str, modes: str):
        self.program = bg.parse_program(bk)
        self.modes = bg.parse_modes(modes)
        self.types = bg.TypeSystem.from_program(self.program,
                                                bg.declared_type_names(self.modes))

    def config(self, depth, **kw):
        return bg.SaturationConfig(depth=depth, **kw)

    def saturate(self, example_text, depth=2, **kw):
        return bg.saturate(self.program, self.modes, self.types,
                           self.config(depth, **kw), bg.parse_clause(example_text))


@pytest.fixture(scope="session")
def gparent():
    return Setup(GPARENT_BK, GPARENT_MODES)


@pytest.fixture(scope="session")
def gparent_example():
    return bg.parse_clause(GPARENT_EXAMPLE)


# Example 7 / Example 10 setting: one constant under two numeric typings.
INT_REAL_MODES = """
:- modeh(p(+int)).
:- modeh(p(+real)).
:- modeb(q(+int)).
:- modeb(q(+real)).
:- modeb(r(+int)).
:- modeb(r(+real)).
"""


@pytest.fixture(scope="session")
def int_real():
    return Setup("", INT_REAL_MODES)


# Example 13 setting: '#'-marked symbolic and numeric constants.
COLOUR_BK = "colour(white). colour(black)."
COLOUR_MODES = """
:- modeh(p(+real)).
:- modeb(q(+real,#colour)).
:- modeb(r(#colour,#real)).
"""


@pytest.fixture(scope="session")
def colour():
    return Setup(COLOUR_BK, COLOUR_MODES)


@pytest.fixture(scope="session")
def molecules():
    root = DATA / "toy_molecules"
    setup = Setup(root.joinpath("bk.pl").read_text(),
                  root.joinpath("modes.pl").read_text())
    setup.examples = bg.parse_program(root.joinpath("examples.pl").read_text()).clauses
    return setup
