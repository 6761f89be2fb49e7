"""Modified Quine-McCluskey: prime implicants via E-sum matching.

Instead of pairing every cube of group ``g`` with every cube of group
``g + 1``, a cube with least minterm ``x`` only looks at cubes of the next
group whose least minterm is ``x + 2**p``. Two such cubes combine when their
E-sums are equal; the new cube keeps ``x`` and adds the difference (the
mismatch positional weight) to its E-sum.
"""
from __future__ import annotations

from .core import BooleanFunction, Cube, EmptyFunctionError, GroupTable, is_power_of_two
from .qm import ComparisonCounter


def group_minterms(f: BooleanFunction) -> GroupTable:
    on = sorted(f.on_set)
    if not on:
        raise EmptyFunctionError("function has no care or don't-care minterms")
    table = GroupTable(f.n)
    for m in on:
        table.add(Cube(m, 0))
    return table


def mqm_match(a: Cube, b: Cube) -> int | None:
    """Mismatch positional weight if ``a`` and ``b`` combine, else ``None``."""
    if a.esum != b.esum:
        return None
    mpw = b.least - a.least
    if not is_power_of_two(mpw):
        return None
    return mpw


def combine(a: Cube, b: Cube, mpw: int) -> Cube:
    return Cube(a.least, a.esum + mpw)


def dedup(group: list[Cube]) -> list[Cube]:
    # (least, esum) fixes largest = least + esum, so two fields suffice
    return list(dict.fromkeys(group))


def mqm_pass(
    groups: GroupTable,
    counter: ComparisonCounter | None = None,
    *,
    keep_duplicates: bool = False,
) -> GroupTable:
    """Run one combining pass; checkmarks ``groups`` in place, returns the next table."""
    if counter is None:
        counter = ComparisonCounter()
    n = groups.n
    counter.start_pass()
    out = GroupTable(n)
    for g in sorted(groups.groups):
        upper = groups.groups.get(g + 1)
        if not upper:
            continue
        by_least: dict[int, list[Cube]] = {}
        for b in upper:
            by_least.setdefault(b.least, []).append(b)
        for a in groups.groups[g]:
            for p in range(n):
                targets = by_least.get(a.least + (1 << p))
                if not targets:
                    continue
                for b in targets:
                    counter.tick(source=a)
                    mpw = mqm_match(a, b)
                    if mpw is None:
                        continue
                    out.groups.setdefault(g, []).append(combine(a, b, mpw))
                    groups.checkmarks.add(a)
                    groups.checkmarks.add(b)
    if not keep_duplicates:
        out.groups = {g: dedup(cubes) for g, cubes in out.groups.items()}
    return out


def mqm_tables(
    f: BooleanFunction,
    counter: ComparisonCounter | None = None,
    max_passes: int | None = None,
) -> list[GroupTable]:
    """Every table produced along the way, starting with the grouped minterms.

    Checkmarks on each table record which of its cubes were combined in the
    following pass.
    """
    if counter is None:
        counter = ComparisonCounter()
    tables = [group_minterms(f)]
    while tables[-1].has_adjacent_groups() and len(tables) - 1 != max_passes:
        nxt = mqm_pass(tables[-1], counter)
        if not len(nxt):
            break
        tables.append(nxt)
    return tables


def mqm_prime_implicants(
    f: BooleanFunction,
    counter: ComparisonCounter | None = None,
    max_passes: int | None = None,
) -> set[Cube]:
    """Never-checkmarked cubes from every table; see :func:`mqm_tables`."""
    primes: set[Cube] = set()
    for table in mqm_tables(f, counter, max_passes):
        primes.update(table.unchecked())
    return primes
