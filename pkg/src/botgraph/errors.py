"""Exception types shared across the package."""


class BotgraphError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(BotgraphError):
    """Syntax error in a clause, mode or label file; carries source position."""

    def __init__(self, message, source="<string>", line=0, column=0):
        super().__init__(f"{source}:{line}:{column}: {message}")
        self.source = source
        self.line = line
        self.column = column


class PositionError(BotgraphError):
    """A place-number addresses a position that does not exist."""


class UnknownPredicateError(BotgraphError):
    """A goal's predicate has no definition, no stored facts and is not a built-in."""


class EngineError(BotgraphError):
    """The deduction engine hit a state it cannot handle (e.g. non-ground answer)."""


class LanguageError(BotgraphError):
    """A clause outside the depth-limited mode language where membership is required."""


class ShapeError(BotgraphError):
    """A clause-graph does not have the shape of a definite clause."""


class SubsetError(BotgraphError):
    """A hypothesis clause is not a subset of the bottom clause it explains."""


class VocabularyError(BotgraphError):
    """A vertex label cannot be encoded with the dataset vocabulary."""


class DatasetError(BotgraphError):
    """Dataset assembly or export failed; carries the offending example id if any."""
