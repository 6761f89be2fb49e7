"""Text input: list-form function specs and sum-of-products expressions.

List form::

    n=4 m(4,5,6,8,9,10,13) d(0,7,15)

Expressions are ``+``-separated products of single-letter variables, a
trailing apostrophe marks a complement (``A'B + CD``).
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import (
    BooleanFunction,
    ContradictoryLiteralError,
    Literal,
    ParseError,
    Term,
    UnknownVariableError,
    cube_members,
    sop_to_text,
)


@dataclass(frozen=True)
class SopExpression:
    alphabet: str
    terms: tuple[Term, ...]

    def __post_init__(self):
        check_alphabet(self.alphabet)
        object.__setattr__(self, "terms", tuple(self.terms))

    @property
    def n(self) -> int:
        return len(self.alphabet)

    def evaluate(self, assignment: int) -> bool:
        return any(t.evaluate(assignment) for t in self.terms)

    def __str__(self) -> str:
        return sop_to_text(self.terms, self.alphabet)


@dataclass(frozen=True)
class ExpansionStats:
    input_term_count: int
    canonical_minterm_count: int

    @property
    def added(self) -> int:
        return self.canonical_minterm_count - self.input_term_count


def check_alphabet(alphabet: str) -> None:
    if not alphabet:
        raise ParseError("variable alphabet is empty")
    for ch in alphabet:
        if not ch.isalpha() or len(ch) != 1:
            raise ParseError(f"variable names must be single letters, got {ch!r}")
    if len(set(alphabet)) != len(alphabet):
        raise ParseError(f"variable names are not distinct: {alphabet!r}")


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, literal: str) -> None:
        self.skip_ws()
        if not self.text.startswith(literal, self.pos):
            found = self.text[self.pos:self.pos + len(literal)] or "end of input"
            raise ParseError(f"expected {literal!r}, found {found!r}", self.pos)
        self.pos += len(literal)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected an integer", start)
        return int(self.text[start:self.pos])

    def int_list(self) -> list[int]:
        values: list[int] = []
        if self.peek() == ")":
            return values
        values.append(self.integer())
        while self.peek() == ",":
            self.pos += 1
            values.append(self.integer())
        return values

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)


def parse_function_spec(text: str) -> BooleanFunction:
    cur = _Cursor(text)
    cur.expect("n")
    cur.expect("=")
    n = cur.integer()
    cur.expect("m(")
    care = cur.int_list()
    cur.expect(")")
    dont_cares: list[int] = []
    if not cur.at_end():
        cur.expect("d(")
        dont_cares = cur.int_list()
        cur.expect(")")
    if not cur.at_end():
        raise ParseError("unexpected trailing input", cur.pos)
    return BooleanFunction(n, frozenset(care), frozenset(dont_cares))


def parse_sop_expression(text: str, alphabet: str) -> SopExpression:
    check_alphabet(alphabet)
    index = {name: i for i, name in enumerate(alphabet)}
    n = len(alphabet)

    body_start = 0
    eq = text.find("=")
    if eq >= 0:
        lhs = text[:eq].strip()
        if len(lhs) != 1 or not lhs.isalpha():
            raise ParseError("only a single-letter output name may precede '='", 0)
        body_start = eq + 1

    terms = []
    pos = body_start
    for chunk in text[body_start:].split("+"):
        terms.append(_parse_product(chunk, pos, index, n))
        pos += len(chunk) + 1
    return SopExpression(alphabet, tuple(terms))


def _parse_product(chunk: str, offset: int, index: dict[str, int], n: int) -> Term:
    literals = [Literal.ABSENT] * n
    seen_any = False
    constant_one = False
    i = 0
    while i < len(chunk):
        ch = chunk[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "1" and not seen_any and not constant_one:
            constant_one = True
            i += 1
            continue
        if not ch.isalpha():
            raise ParseError(f"unexpected character {ch!r}", offset + i)
        if constant_one:
            raise ParseError("constant 1 must stand alone in its product", offset + i)
        if ch not in index:
            raise UnknownVariableError(f"unknown variable {ch!r}", offset + i)
        j = i + 1
        while j < len(chunk) and chunk[j].isspace():
            j += 1
        negated = j < len(chunk) and chunk[j] == "'"
        lit = Literal.NEG if negated else Literal.POS
        slot = index[ch]
        if literals[slot] is not Literal.ABSENT and literals[slot] is not lit:
            raise ContradictoryLiteralError(
                f"variable {ch!r} appears with both polarities in one product",
                offset + i,
            )
        literals[slot] = lit
        seen_any = True
        i = j + 1 if negated else i + 1
    if not seen_any and not constant_one:
        raise ParseError("empty product", offset)
    return Term(tuple(literals))


def canonicalize(expr: SopExpression) -> tuple[BooleanFunction, ExpansionStats]:
    """Expand every product over its missing variables and merge the minterms."""
    n = expr.n
    minterms: set[int] = set()
    for t in expr.terms:
        minterms.update(cube_members(t.to_cube(), n))
    stats = ExpansionStats(len(expr.terms), len(minterms))
    return BooleanFunction(n, frozenset(minterms)), stats
