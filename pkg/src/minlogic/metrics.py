"""Worst-case comparison formulas, a brute-force PI oracle, and the benchmark."""
from __future__ import annotations

import time
from dataclasses import dataclass

from .core import BooleanFunction, Cube, RangeError, check_variable_count, iter_submasks
from .mqm import mqm_prime_implicants
from .qm import ComparisonCounter, qm_prime_implicants

ORACLE_MAX_VARIABLES = 12
BENCH_MAX_VARIABLES = 12


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        result = result * (n - k + i) // i
    return result


def worst_case_qm_comparisons(n: int) -> int:
    check_variable_count(n)
    return sum(binomial(n, i) * binomial(n, i + 1) for i in range(n))


def mqm_comparison_sum(n: int) -> int:
    return sum(binomial(n, i) * (n - i) for i in range(n))


def worst_case_mqm_comparisons(n: int) -> int:
    check_variable_count(n)
    closed = n * 2 ** (n - 1)
    assert mqm_comparison_sum(n) == closed, n
    return closed


def brute_force_prime_implicants(f: BooleanFunction) -> set[Cube]:
    """Maximal cubes inside care + don't-care, found by enumerating all 3**n cubes.

    Independent of both combining procedures: implicants are checked against
    the truth table directly and primality is containment maximality.
    """
    n = f.n
    if n > ORACLE_MAX_VARIABLES:
        raise RangeError(f"oracle supports n <= {ORACLE_MAX_VARIABLES}, got {n}")
    full = (1 << n) - 1
    on = [False] * (1 << n)
    for m in f.on_set:
        on[m] = True

    implicants: set[Cube] = set()
    for esum in range(1 << n):
        for least in iter_submasks(full & ~esum):
            if all(on[least + s] for s in iter_submasks(esum)):
                implicants.add(Cube(least, esum))

    primes = set()
    for c in implicants:
        # any strictly larger implicant contains one of these one-step enlargements
        free = full & ~c.esum
        bigger = (
            Cube(c.least & ~(1 << b), c.esum | (1 << b))
            for b in range(n)
            if free >> b & 1
        )
        if not any(d in implicants for d in bigger):
            primes.add(c)
    return primes


def all_minterms_function(n: int) -> BooleanFunction:
    return BooleanFunction(n, frozenset(range(1 << n)))


@dataclass(frozen=True)
class BenchRow:
    n: int
    qm_formula: int
    mqm_formula: int
    qm_measured: int
    mqm_measured: int
    qm_seconds: float
    mqm_seconds: float

    @property
    def ratio(self) -> float:
        return self.qm_measured / self.mqm_measured

    @property
    def matches(self) -> bool:
        return self.qm_measured == self.qm_formula and self.mqm_measured == self.mqm_formula


def bench_row(n: int) -> BenchRow:
    """Measure first-pass comparisons on the all-minterms function of ``n`` variables."""
    f = all_minterms_function(n)
    qm_counter, mqm_counter = ComparisonCounter(), ComparisonCounter()
    t0 = time.perf_counter()
    qm_prime_implicants(f, qm_counter, max_passes=1)
    t1 = time.perf_counter()
    mqm_prime_implicants(f, mqm_counter, max_passes=1)
    t2 = time.perf_counter()
    return BenchRow(
        n,
        worst_case_qm_comparisons(n),
        worst_case_mqm_comparisons(n),
        qm_counter.per_pass[0],
        mqm_counter.per_pass[0],
        t1 - t0,
        t2 - t1,
    )


def bench_worst_case(n_min: int, n_max: int) -> list[BenchRow]:
    if not 1 <= n_min <= n_max <= BENCH_MAX_VARIABLES:
        raise RangeError(
            f"need 1 <= n_min <= n_max <= {BENCH_MAX_VARIABLES}, got {n_min}..{n_max}"
        )
    return [bench_row(n) for n in range(n_min, n_max + 1)]


class Lcg64:
    """64-bit linear congruential generator; fixed so counterexamples reproduce."""

    MULTIPLIER = 6364136223846793005
    INCREMENT = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next(self) -> int:
        self.state = (self.state * self.MULTIPLIER + self.INCREMENT) & self.MASK
        return self.state


def random_function(n: int, rng: Lcg64) -> BooleanFunction:
    """Each minterm is off (0), care (1) or don't-care (2) by ``rng.next() % 3``."""
    care, dc = set(), set()
    for m in range(1 << n):
        state = rng.next() % 3
        if state == 1:
            care.add(m)
        elif state == 2:
            dc.add(m)
    return BooleanFunction(n, frozenset(care), frozenset(dc))


def random_functions(n: int, trials: int, seed: int):
    rng = Lcg64(seed)
    for _ in range(trials):
        yield random_function(n, rng)
