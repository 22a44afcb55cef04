"""Parser for the definite-clause text format and for mode files.

Grammar (a Prolog-compatible subset):

    program  ::= (clause | directive)*
    clause   ::= literal ( ':-' literal (',' literal)* )? '.'
    literal  ::= atom | atom '(' term (',' term)* ')'
    term     ::= atom | number | variable | atom '(' term... ')' | list
    list     ::= '[' ']' | '[' term (',' term)* ('|' term)? ']'

'%' starts a line comment.  Atoms are lowercase identifiers or quoted with
single quotes; variables start with an uppercase letter or '_'.  Mode files
use directives ':- modeh(...)' / ':- modeb(...)' with an optional leading
recall ('*' or a positive integer).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ParseError
from .logic import (
    Compound,
    Constant,
    DefiniteClause,
    Literal,
    Program,
    Term,
    Variable,
    mklist,
)
from .modes import ConstantArg, InputArg, ModeDecl, ModeTerm, OutputArg, StructuredArg

_PUNCT = {":-", "(", ")", "[", "]", ",", "|", ".", "+", "-", "#", "*"}


@dataclass(frozen=True)
class Token:
    kind: str  # 'atom' 'qatom' 'var' 'int' 'float' 'punct' 'end'
    text: str
    line: int
    column: int


class _Lexer:
    def __init__(self, text: str, source: str):
        self.text = text
        self.source = source

    def error(self, message, line, column):
        raise ParseError(message, self.source, line, column)

    def tokens(self) -> list[Token]:
        out = []
        text, n = self.text, len(self.text)
        i, line, col = 0, 1, 1
        while i < n:
            c = text[i]
            if c == "\n":
                i, line, col = i + 1, line + 1, 1
                continue
            if c in " \t\r":
                i, col = i + 1, col + 1
                continue
            if c == "%":
                while i < n and text[i] != "\n":
                    i += 1
                continue
            start_line, start_col = line, col
            if c == ":" and text[i : i + 2] == ":-":
                out.append(Token("punct", ":-", line, col))
                i, col = i + 2, col + 2
                continue
            if c.isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                kind = "int"
                if j < n and text[j] == "." and j + 1 < n and text[j + 1].isdigit():
                    kind = "float"
                    j += 1
                    while j < n and text[j].isdigit():
                        j += 1
                out.append(Token(kind, text[i:j], line, col))
                col += j - i
                i = j
                continue
            if c.islower():
                j = i
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                out.append(Token("atom", text[i:j], line, col))
                col += j - i
                i = j
                continue
            if c.isupper() or c == "_":
                j = i
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                out.append(Token("var", text[i:j], line, col))
                col += j - i
                i = j
                continue
            if c == "'":
                j = i + 1
                while j < n and text[j] != "'":
                    if text[j] == "\n":
                        self.error("newline inside quoted atom", start_line, start_col)
                    j += 1
                if j >= n:
                    self.error("unterminated quoted atom", start_line, start_col)
                out.append(Token("qatom", text[i + 1 : j], line, col))
                col += j + 1 - i
                i = j + 1
                continue
            if c in "()[],|.+-#*":
                out.append(Token("punct", c, line, col))
                i, col = i + 1, col + 1
                continue
            self.error(f"unexpected character {c!r}", line, col)
        out.append(Token("end", "", line, col))
        return out


class _Parser:
    def __init__(self, text: str, source: str):
        self.source = source
        self.toks = _Lexer(text, source).tokens()
        self.pos = 0

    # -- token plumbing ----------------------------------------------------
    def peek(self) -> Token:
        return self.toks[self.pos]

    def next(self) -> Token:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def error(self, message, tok: Optional[Token] = None):
        tok = tok or self.peek()
        raise ParseError(message, self.source, tok.line, tok.column)

    def expect(self, text: str) -> Token:
        tok = self.next()
        if tok.kind != "punct" or tok.text != text:
            self.error(f"expected {text!r}, found {tok.text!r}", tok)
        return tok

    def at_punct(self, text: str) -> bool:
        tok = self.peek()
        return tok.kind == "punct" and tok.text == text

    # -- terms -------------------------------------------------------------
    def parse_term(self) -> Term:
        tok = self.next()
        if tok.kind in ("int", "float"):
            return Constant(tok.text, numeric=True)
        if tok.kind == "punct" and tok.text == "-":
            num = self.next()
            if num.kind not in ("int", "float"):
                self.error("expected a number after '-'", num)
            return Constant("-" + num.text, numeric=True)
        if tok.kind == "var":
            if tok.text == "_":
                return Variable("_", serial=-self.pos)  # each '_' is fresh
            return Variable(tok.text)
        if tok.kind in ("atom", "qatom"):
            if self.at_punct("("):
                self.next()
                args = self.parse_term_list()
                self.expect(")")
                return Compound(tok.text, tuple(args))
            return Constant(tok.text)
        if tok.kind == "punct" and tok.text == "[":
            return self.parse_list()
        self.error(f"unexpected token {tok.text!r} in term", tok)

    def parse_term_list(self) -> list[Term]:
        items = [self.parse_term()]
        while self.at_punct(","):
            self.next()
            items.append(self.parse_term())
        return items

    def parse_list(self) -> Term:
        if self.at_punct("]"):
            self.next()
            return mklist([])
        items = self.parse_term_list()
        tail: Term = mklist([])
        if self.at_punct("|"):
            self.next()
            tail = self.parse_term()
        self.expect("]")
        return mklist(items, tail)

    # -- literals and clauses ----------------------------------------------
    def parse_literal(self) -> Literal:
        tok = self.next()
        if tok.kind not in ("atom", "qatom"):
            self.error(f"expected a predicate name, found {tok.text!r}", tok)
        if self.at_punct("("):
            self.next()
            args = self.parse_term_list()
            self.expect(")")
            return Literal(tok.text, tuple(args))
        return Literal(tok.text)

    def parse_clause(self) -> DefiniteClause:
        head_tok = self.peek()
        if head_tok.kind == "punct" and head_tok.text == ":-":
            self.error("directives are not definite clauses (a clause needs exactly one head)")
        head = self.parse_literal()
        body: list[Literal] = []
        if self.at_punct(":-"):
            self.next()
            body.append(self.parse_literal())
            while self.at_punct(","):
                self.next()
                body.append(self.parse_literal())
        self.expect(".")
        return DefiniteClause(head, tuple(body), source=(self.source, head_tok.line))

    def parse_program(self) -> Program:
        clauses = []
        while self.peek().kind != "end":
            clauses.append(self.parse_clause())
        return Program(tuple(clauses), source=self.source)

    # -- mode files ----------------------------------------------------------
    def parse_mode_term(self) -> ModeTerm:
        tok = self.next()
        if tok.kind == "punct" and tok.text in "+-#":
            name = self.next()
            if name.kind not in ("atom", "qatom"):
                self.error(f"expected a type name after {tok.text!r}", name)
            cls = {"+": InputArg, "-": OutputArg, "#": ConstantArg}[tok.text]
            return cls(name.text)
        if tok.kind in ("atom", "qatom"):
            if not self.at_punct("("):
                self.error("bare atom in a mode schema; argument roles are +type, -type or "
                           "#type (or a structured functor)", tok)
            self.next()
            args = [self.parse_mode_term()]
            while self.at_punct(","):
                self.next()
                args.append(self.parse_mode_term())
            self.expect(")")
            return StructuredArg(tok.text, tuple(args))
        self.error(f"unexpected token {tok.text!r} in mode schema", tok)

    def parse_mode_decl(self) -> ModeDecl:
        self.expect(":-")
        kind_tok = self.next()
        if kind_tok.kind != "atom" or kind_tok.text not in ("modeh", "modeb"):
            self.error("expected modeh or modeb", kind_tok)
        self.expect("(")
        recall: Optional[int] = None  # None = unbounded
        tok = self.peek()
        if tok.kind == "punct" and tok.text == "*":
            self.next()
            self.expect(",")
        elif tok.kind == "int":
            self.next()
            recall = int(tok.text)
            if recall <= 0:
                self.error("recall must be a positive integer", tok)
            self.expect(",")
        name_tok = self.next()
        if name_tok.kind not in ("atom", "qatom"):
            self.error("expected a predicate name in the mode schema", name_tok)
        args: tuple[ModeTerm, ...] = ()
        if self.at_punct("("):
            self.next()
            parts = [self.parse_mode_term()]
            while self.at_punct(","):
                self.next()
                parts.append(self.parse_mode_term())
            self.expect(")")
            args = tuple(parts)
        self.expect(")")
        self.expect(".")
        return ModeDecl(kind_tok.text, name_tok.text, args, recall)

    def parse_modes(self) -> list[ModeDecl]:
        decls = []
        while self.peek().kind != "end":
            decls.append(self.parse_mode_decl())
        return decls


def parse_program(text: str, source: str = "<string>") -> Program:
    """Parse a definite-clause program; raises ParseError with line/column."""
    return _Parser(text, source).parse_program()


def parse_clause(text: str, source: str = "<string>") -> DefiniteClause:
    parser = _Parser(text, source)
    clause = parser.parse_clause()
    if parser.peek().kind != "end":
        parser.error("trailing input after clause")
    return clause


def parse_literal(text: str, source: str = "<string>") -> Literal:
    parser = _Parser(text, source)
    lit = parser.parse_literal()
    if parser.peek().kind != "end":
        parser.error("trailing input after literal")
    return lit


def parse_term(text: str, source: str = "<string>") -> Term:
    parser = _Parser(text, source)
    term = parser.parse_term()
    if parser.peek().kind != "end":
        parser.error("trailing input after term")
    return term


def parse_modes(text: str, source: str = "<modes>") -> list[ModeDecl]:
    """Parse a mode file; declaration order is preserved."""
    return _Parser(text, source).parse_modes()


def parse_labels(text: str) -> dict[str, str]:
    """Parse an `id,label` file; a `id,label`-shaped header line is skipped."""
    out: dict[str, str] = {}
    for i, raw in enumerate(text.splitlines()):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if i == 0 and line.lower().replace(" ", "") in ("id,label", "example,label"):
            continue
        if "," not in line:
            raise ParseError(f"expected 'id,label', found {line!r}", "<labels>", i + 1, 1)
        ident, label = line.split(",", 1)
        out[ident.strip()] = label.strip()
    return out
