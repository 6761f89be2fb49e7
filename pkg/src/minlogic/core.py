"""Domain types and cube arithmetic.

Minterm indices are plain ints read as bit vectors. With variables A..D the
last variable (D) has positional weight 1 and the first (A) has weight
2**(n-1). A cube is stored as ``(least, esum)``: its smallest member and the
sum of the positional weights of its eliminated variables, which is the same
thing as a bitmask of those positions.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

MAX_VARIABLES = 24


class MinlogicError(Exception):
    """Base class for every error raised by this package."""


class ParseError(MinlogicError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class RangeError(MinlogicError):
    pass


class OverlapError(MinlogicError):
    pass


class InvalidCubeError(MinlogicError):
    pass


class EmptyFunctionError(MinlogicError):
    pass


class UnknownVariableError(ParseError):
    pass


class ContradictoryLiteralError(ParseError):
    pass


class UncoveredMintermError(MinlogicError):
    pass


def popcount(x: int) -> int:
    return bin(x).count("1")


def is_power_of_two(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


def check_variable_count(n: int, cap: int = MAX_VARIABLES) -> None:
    if not isinstance(n, int) or not 1 <= n <= cap:
        raise RangeError(f"variable count must be in [1, {cap}], got {n!r}")


@dataclass(frozen=True)
class BooleanFunction:
    """A single-output function given by care and don't-care minterms."""

    n: int
    minterms: frozenset[int] = frozenset()
    dont_cares: frozenset[int] = frozenset()

    def __post_init__(self):
        check_variable_count(self.n)
        object.__setattr__(self, "minterms", frozenset(self.minterms))
        object.__setattr__(self, "dont_cares", frozenset(self.dont_cares))
        size = 1 << self.n
        for m in self.minterms | self.dont_cares:
            if not isinstance(m, int) or not 0 <= m < size:
                raise RangeError(f"minterm {m!r} out of range for n={self.n}")
        overlap = self.minterms & self.dont_cares
        if overlap:
            raise OverlapError(
                f"minterms listed as both care and don't-care: {sorted(overlap)}"
            )

    @property
    def on_set(self) -> frozenset[int]:
        """Care and don't-care minterms together; everything a cube may cover."""
        return self.minterms | self.dont_cares

    def to_spec(self) -> str:
        text = f"n={self.n} m({','.join(map(str, sorted(self.minterms)))})"
        if self.dont_cares:
            text += f" d({','.join(map(str, sorted(self.dont_cares)))})"
        return text


@dataclass(frozen=True, order=True)
class Cube:
    least: int
    esum: int = 0

    @property
    def largest(self) -> int:
        return self.least + self.esum

    @property
    def size(self) -> int:
        return 1 << popcount(self.esum)

    def literal_count(self, n: int) -> int:
        return n - popcount(self.esum)

    def is_valid(self, n: int) -> bool:
        size = 1 << n
        return (
            self.least >= 0
            and self.esum >= 0
            and self.least & self.esum == 0
            and self.least + self.esum < size
        )

    def contains(self, minterm: int) -> bool:
        return (minterm & ~self.esum) == self.least

    def __str__(self) -> str:
        return f"({self.least}, {self.esum})"


def _check_cube(c: Cube, n: int) -> None:
    if not c.is_valid(n):
        raise InvalidCubeError(f"cube {c} is not well formed for n={n}")


def iter_submasks(mask: int) -> Iterator[int]:
    """All subsets of the set bits of ``mask``, in ascending numeric order."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def cube_members(c: Cube, n: int) -> list[int]:
    _check_cube(c, n)
    return [c.least + s for s in iter_submasks(c.esum)]


class Literal(enum.Enum):
    POS = "pos"
    NEG = "neg"
    ABSENT = "absent"


@dataclass(frozen=True)
class Term:
    """Product term; ``literals[0]`` belongs to the most significant variable."""

    literals: tuple[Literal, ...]

    def __post_init__(self):
        object.__setattr__(self, "literals", tuple(self.literals))

    @property
    def n(self) -> int:
        return len(self.literals)

    @property
    def is_constant_one(self) -> bool:
        return all(lit is Literal.ABSENT for lit in self.literals)

    def literal_count(self) -> int:
        return sum(lit is not Literal.ABSENT for lit in self.literals)

    def evaluate(self, assignment: int) -> bool:
        n = self.n
        for i, lit in enumerate(self.literals):
            bit = (assignment >> (n - 1 - i)) & 1
            if lit is Literal.POS and not bit:
                return False
            if lit is Literal.NEG and bit:
                return False
        return True

    def to_cube(self) -> Cube:
        n = self.n
        least = esum = 0
        for i, lit in enumerate(self.literals):
            weight = 1 << (n - 1 - i)
            if lit is Literal.ABSENT:
                esum |= weight
            elif lit is Literal.POS:
                least |= weight
        return Cube(least, esum)


def cube_to_term(c: Cube, n: int) -> Term:
    _check_cube(c, n)
    literals = []
    for i in range(n):
        weight = 1 << (n - 1 - i)
        if c.esum & weight:
            literals.append(Literal.ABSENT)
        elif c.least & weight:
            literals.append(Literal.POS)
        else:
            literals.append(Literal.NEG)
    return Term(tuple(literals))


def term_to_text(t: Term, alphabet: Sequence[str]) -> str:
    if len(alphabet) != t.n:
        raise ValueError(f"alphabet has {len(alphabet)} names for {t.n} literals")
    if t.is_constant_one:
        return "1"
    parts = []
    for name, lit in zip(alphabet, t.literals):
        if lit is Literal.POS:
            parts.append(name)
        elif lit is Literal.NEG:
            parts.append(name + "'")
    return "".join(parts)


def sop_to_text(terms: Iterable[Term], alphabet: Sequence[str]) -> str:
    return " + ".join(term_to_text(t, alphabet) for t in terms)


def default_alphabet(n: int) -> str:
    check_variable_count(n)
    return "ABCDEFGHIJKLMNOPQRSTUVWXYZ"[:n]


@dataclass
class GroupTable:
    """Cubes bucketed by the number of 1-bits in their least minterm."""

    n: int
    groups: dict[int, list[Cube]] = field(default_factory=dict)
    checkmarks: set[Cube] = field(default_factory=set)

    def add(self, c: Cube) -> None:
        self.groups.setdefault(popcount(c.least), []).append(c)

    def cubes(self) -> Iterator[Cube]:
        for g in sorted(self.groups):
            yield from self.groups[g]

    def unchecked(self) -> list[Cube]:
        return [c for c in self.cubes() if c not in self.checkmarks]

    def has_adjacent_groups(self) -> bool:
        return any(self.groups.get(g) and self.groups.get(g + 1) for g in self.groups)

    def __len__(self) -> int:
        return sum(len(v) for v in self.groups.values())
