"""Classic Quine-McCluskey prime implicant generation.

This is the baseline: every cube in group ``g`` is paired with every cube in
group ``g + 1``. It shares no combining code with :mod:`minlogic.mqm` so the
two can check each other.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .core import BooleanFunction, Cube, EmptyFunctionError, popcount


@dataclass
class ComparisonCounter:
    """Candidate pairings tested, one entry per combining pass."""

    per_pass: list[int] = field(default_factory=list)
    track_sources: bool = False
    # per pass: source cube -> pairings it initiated (only if track_sources)
    sources: list[dict] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(self.per_pass)

    @property
    def passes(self) -> int:
        return len(self.per_pass)

    def start_pass(self) -> None:
        self.per_pass.append(0)
        if self.track_sources:
            self.sources.append({})

    def tick(self, k: int = 1, source=None) -> None:
        if not self.per_pass:
            self.start_pass()
        self.per_pass[-1] += k
        if self.track_sources and source is not None:
            bucket = self.sources[-1]
            bucket[source] = bucket.get(source, 0) + k

    def as_dict(self) -> dict:
        return {"per_pass": list(self.per_pass), "total": self.total}


def _bucket(implicants):
    groups: dict[int, list[tuple[int, int]]] = {}
    for value, mask in implicants:
        groups.setdefault(popcount(value), []).append((value, mask))
    return groups


def qm_prime_implicants(
    f: BooleanFunction,
    counter: ComparisonCounter | None = None,
    max_passes: int | None = None,
) -> set[Cube]:
    """Prime implicants of ``f`` over its care and don't-care minterms.

    With ``max_passes`` set, combining stops early and the cubes of the last
    level reached are returned as they are (not necessarily prime).
    """
    if counter is None:
        counter = ComparisonCounter()
    on = sorted(f.on_set)
    if not on:
        raise EmptyFunctionError("function has no care or don't-care minterms")

    # (value, dash-mask); value carries 0 in every dashed position
    level = [(m, 0) for m in on]
    primes: set[Cube] = set()
    counter_passes = 0
    while True:
        groups = _bucket(level)
        if not any(g + 1 in groups for g in groups) or counter_passes == max_passes:
            primes.update(Cube(v, m) for v, m in level)
            break
        counter.start_pass()
        counter_passes += 1
        combined: dict[tuple[int, int], None] = {}
        used: set[tuple[int, int]] = set()
        for g in sorted(groups):
            upper = groups.get(g + 1)
            if not upper:
                continue
            for a in groups[g]:
                for b in upper:
                    counter.tick()
                    if a[1] != b[1]:
                        continue
                    diff = a[0] ^ b[0]
                    if diff & (diff - 1):
                        continue
                    combined[(a[0], a[1] | diff)] = None
                    used.add(a)
                    used.add(b)
        primes.update(Cube(v, m) for v, m in level if (v, m) not in used)
        if not combined:
            break
        level = list(combined)
    return primes
