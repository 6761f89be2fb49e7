"""Prime implicant chart and exact cover selection.

Selection cost, compared in order: number of cubes, total literal count, then
the ascending list of ``(least, esum)`` pairs. Essential rows are taken
first, dominated rows and columns are dropped, and whatever cyclic core is
left goes through Petrick's method.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .core import (
    BooleanFunction,
    Cube,
    EmptyFunctionError,
    Term,
    UncoveredMintermError,
    cube_members,
    cube_to_term,
)
from .mqm import mqm_prime_implicants
from .qm import ComparisonCounter, qm_prime_implicants


class Method(str, enum.Enum):
    QM = "qm"
    MQM = "mqm"


PI_GENERATORS = {
    Method.QM: qm_prime_implicants,
    Method.MQM: mqm_prime_implicants,
}


@dataclass
class PIChart:
    n: int
    rows: list[Cube]
    cols: list[int]
    covers: list[list[bool]]

    def rows_covering(self, col: int) -> list[int]:
        return [r for r in range(len(self.rows)) if self.covers[r][col]]


def build_chart(pis, f: BooleanFunction) -> PIChart:
    rows = sorted(pis)
    cols = sorted(f.minterms)
    member_sets = [set(cube_members(c, f.n)) for c in rows]
    covers = [[m in members for m in cols] for members in member_sets]
    for j, m in enumerate(cols):
        if not any(covers[r][j] for r in range(len(rows))):
            raise UncoveredMintermError(f"care minterm {m} is covered by no prime implicant")
    return PIChart(f.n, rows, cols, covers)


def selection_key(cubes, n: int):
    ordered = sorted(cubes)
    return (len(ordered), sum(c.literal_count(n) for c in ordered), ordered)


def presentation_order(cubes) -> list[Cube]:
    """Smallest cubes (most literals) first, then by least minterm."""
    return sorted(cubes, key=lambda c: (c.size, c.least, c.esum))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _petrick(clauses: list[int], cost) -> int:
    """Cheapest product of the covering condition ``AND(OR(rows))``.

    Each clause is a bitmask of the rows covering one column. The product of
    sums is multiplied out depth first: take the open clause with the fewest
    candidate rows and branch on each of them, excluding rows already tried
    in earlier sibling branches so no product is visited twice. A branch is
    cut when a lower bound (one extra row per pairwise disjoint open clause)
    cannot beat the best complete product. ``cost(mask)`` must be monotone
    in the number of rows first.
    """
    best_mask = None
    best_cost = None

    def lower_bound(open_clauses):
        used = 0
        count = 0
        for c in sorted(open_clauses, key=int.bit_count):
            if not c & used:
                used |= c
                count += 1
        return count

    def expand(chosen: int, excluded: int, open_clauses: list[int]):
        nonlocal best_mask, best_cost
        if not open_clauses:
            c = cost(chosen)
            if best_cost is None or c < best_cost:
                best_mask, best_cost = chosen, c
            return
        if best_cost is not None:
            if chosen.bit_count() + lower_bound(open_clauses) > best_cost[0]:
                return
        clause = min(open_clauses, key=int.bit_count)
        for r in _bits(clause):
            bit = 1 << r
            rest = []
            for c in open_clauses:
                if c & bit:
                    continue
                c &= ~(excluded | bit)
                if not c:
                    break
                rest.append(c)
            else:
                expand(chosen | bit, excluded, rest)
            excluded |= bit

    expand(0, 0, [c for c in clauses])
    return best_mask


def select_cover(chart: PIChart) -> list[Cube]:
    n = chart.n
    rank = {r: (c.literal_count(n), c.least, c.esum) for r, c in enumerate(chart.rows)}
    row_cols = {
        r: {j for j in range(len(chart.cols)) if chart.covers[r][j]}
        for r in range(len(chart.rows))
    }
    rows_left = set(row_cols)
    cols_left = set(range(len(chart.cols)))
    chosen: set[int] = set()

    def covering(j):
        return frozenset(r for r in rows_left if j in row_cols[r])

    changed = True
    while changed and cols_left:
        changed = False

        for j in sorted(cols_left):
            if j not in cols_left:
                continue
            rows = covering(j)
            if not rows:
                raise UncoveredMintermError(f"care minterm {chart.cols[j]} cannot be covered")
            if len(rows) == 1:
                (r,) = rows
                chosen.add(r)
                rows_left.discard(r)
                cols_left -= row_cols[r]
                changed = True

        # drop rows that cover nothing new, or a subset of a better-ranked row
        live = {r: row_cols[r] & cols_left for r in rows_left}
        for r in sorted(rows_left, key=rank.get, reverse=True):
            if not live[r] or any(
                s != r and s in rows_left and live[r] <= live[s] and rank[s] < rank[r]
                for s in live
            ):
                rows_left.discard(r)
                changed = True

        # a column whose coverers include all coverers of another is implied by it
        col_rows = {j: covering(j) for j in cols_left}
        for j in sorted(cols_left, reverse=True):
            if any(
                k != j and k in cols_left and col_rows[k] <= col_rows[j]
                and (col_rows[k] != col_rows[j] or k < j)
                for k in col_rows
            ):
                cols_left.discard(j)
                changed = True

    best: set[int] = set()
    if cols_left:
        clauses = [sum(1 << r for r in covering(j)) for j in cols_left]
        mask = _petrick(
            clauses,
            lambda m: selection_key([chart.rows[r] for r in chosen | set(_bits(m))], n),
        )
        best = set(_bits(mask))
    return presentation_order(chart.rows[r] for r in chosen | best)


@dataclass
class Minimization:
    function: BooleanFunction
    method: Method
    prime_implicants: list[Cube]
    cover: list[Cube]
    counter: ComparisonCounter = field(default_factory=ComparisonCounter)

    @property
    def terms(self) -> list[Term]:
        return [cube_to_term(c, self.function.n) for c in self.cover]

    @property
    def literal_count(self) -> int:
        return sum(c.literal_count(self.function.n) for c in self.cover)


def run_minimization(f: BooleanFunction, method=Method.MQM) -> Minimization:
    method = Method(method)
    if not f.minterms:
        raise EmptyFunctionError("function has no care minterms")
    counter = ComparisonCounter()
    pis = PI_GENERATORS[method](f, counter)
    cover = select_cover(build_chart(pis, f))
    return Minimization(f, method, sorted(pis), cover, counter)


def minimize(f: BooleanFunction, method=Method.MQM) -> tuple[list[Term], ComparisonCounter]:
    result = run_minimization(f, method)
    return result.terms, result.counter
