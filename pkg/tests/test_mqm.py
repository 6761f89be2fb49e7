import itertools
import random

import pytest

from minlogic.core import BooleanFunction, Cube, EmptyFunctionError, cube_members, popcount
from minlogic.metrics import all_minterms_function, binomial, brute_force_prime_implicants
from minlogic.mqm import (
    combine,
    dedup,
    group_minterms,
    mqm_match,
    mqm_pass,
    mqm_prime_implicants,
    mqm_tables,
)
from minlogic.qm import ComparisonCounter, qm_prime_implicants

from conftest import EXAMPLE1_PIS

TABLE3 = {
    0: [Cube(0, 4), Cube(0, 8)],
    1: [Cube(4, 1), Cube(4, 2), Cube(8, 1), Cube(8, 2)],
    2: [Cube(5, 2), Cube(5, 8), Cube(6, 1), Cube(9, 4)],
    3: [Cube(7, 8), Cube(13, 2)],
}
TABLE3_CHECKED = {Cube(4, 1), Cube(4, 2), Cube(5, 2), Cube(5, 8), Cube(6, 1), Cube(7, 8), Cube(13, 2)}


def test_group_minterms_example1(example1):
    table = group_minterms(example1)
    assert {g: [c.least for c in cubes] for g, cubes in table.groups.items()} == {
        0: [0], 1: [4, 8], 2: [5, 6, 9, 10], 3: [7, 13], 4: [15]
    }
    assert all(c.esum == 0 for c in table.cubes())
    assert not table.checkmarks


def test_group_minterms_small_cases():
    assert group_minterms(BooleanFunction(2, {3})).groups == {2: [Cube(3, 0)]}
    table = group_minterms(all_minterms_function(6))
    assert {g: len(v) for g, v in table.groups.items()} == {g: binomial(6, g) for g in range(7)}
    with pytest.raises(EmptyFunctionError):
        group_minterms(BooleanFunction(2, set()))


def test_mqm_match_examples():
    assert mqm_match(Cube(0, 0), Cube(4, 0)) == 4
    assert mqm_match(Cube(4, 3), Cube(5, 10)) is None
    assert mqm_match(Cube(0, 0), Cube(3, 0)) is None
    assert mqm_match(Cube(4, 0), Cube(4, 0)) is None
    assert mqm_match(Cube(5, 0), Cube(4, 0)) is None


def test_combine_examples():
    assert combine(Cube(4, 1), Cube(6, 1), 2) == Cube(4, 3)
    assert combine(Cube(5, 2), Cube(13, 2), 8) == Cube(5, 10)
    assert combine(Cube(0, 0), Cube(8, 0), 8) == Cube(0, 8)


def identical(a, b):
    """The three-field identity rule: same E-sum, least and largest minterm."""
    return (a.esum, min(cube_members(a, 4)), max(cube_members(a, 4))) == (
        b.esum, min(cube_members(b, 4)), max(cube_members(b, 4)))


def test_dedup_examples():
    assert dedup([Cube(4, 3), Cube(4, 3)]) == [Cube(4, 3)]
    assert dedup([]) == []
    group = [Cube(5, 10), Cube(5, 10), Cube(9, 4)]
    expected = [c for i, c in enumerate(group) if not any(identical(c, d) for d in group[:i])]
    assert expected == [Cube(5, 10), Cube(9, 4)]
    assert dedup(group) == expected


def test_example1_pass1(example1):
    table = group_minterms(example1)
    counter = ComparisonCounter()
    nxt = mqm_pass(table, counter)
    assert nxt.groups == TABLE3
    # every Table 2 entry carries a checkmark
    assert table.checkmarks == set(table.cubes())
    assert counter.per_pass == [12]


def test_example1_pass2(example1):
    table3 = mqm_pass(group_minterms(example1))
    raw = mqm_pass(table3, keep_duplicates=True)
    assert raw.groups == {1: [Cube(4, 3), Cube(4, 3)], 2: [Cube(5, 10), Cube(5, 10)]}
    assert table3.checkmarks == TABLE3_CHECKED

    table3 = mqm_pass(group_minterms(example1))
    table4 = mqm_pass(table3)
    assert table4.groups == {1: [Cube(4, 3)], 2: [Cube(5, 10)]}


def test_example1_tables_and_primes(example1):
    counter = ComparisonCounter()
    tables = mqm_tables(example1, counter)
    assert len(tables) == 3
    assert tables[1].groups == TABLE3
    assert tables[2].groups == {1: [Cube(4, 3)], 2: [Cube(5, 10)]}
    # (4,5,6,7) and (5,7,13,15) meet once and do not combine
    assert not tables[2].checkmarks
    assert counter.per_pass[-1] == 1
    assert mqm_prime_implicants(example1) == EXAMPLE1_PIS


def test_worst_case_pass1_n4():
    counter = ComparisonCounter()
    table = group_minterms(all_minterms_function(4))
    mqm_pass(table, counter)
    assert counter.per_pass == [32]


@pytest.mark.parametrize("n", range(1, 9))
def test_all_minterms_reduce_to_constant_one(n):
    counter = ComparisonCounter()
    assert mqm_prime_implicants(all_minterms_function(n), counter) == {Cube(0, (1 << n) - 1)}
    assert counter.per_pass[0] == n * 2 ** (n - 1)
    assert counter.passes == n


def test_single_minterm():
    for m in range(8):
        assert mqm_prime_implicants(BooleanFunction(3, {m})) == {Cube(m, 0)}


def test_shared_least_minterm_probes_every_cube():
    # after pass 1, group 1 holds (1,4), (4,1) and (4,2); a probe for least
    # minterm 4 has to test both cubes sharing it
    table = group_minterms(BooleanFunction(3, {0, 1, 4, 5, 6}))
    first = mqm_pass(table)
    assert first.groups[1] == [Cube(1, 4), Cube(4, 1), Cube(4, 2)]
    counter = ComparisonCounter(track_sources=True)
    mqm_pass(first, counter)
    # 1 pairing at least minterm 1, 2 at least minterm 4
    assert counter.sources[0] == {Cube(0, 1): 3, Cube(0, 4): 3}


def test_exhaustive_n3_against_oracle_and_qm():
    for bits in range(1, 1 << 8):
        f = BooleanFunction(3, {m for m in range(8) if bits >> m & 1})
        pis = mqm_prime_implicants(f)
        assert pis == qm_prime_implicants(f) == brute_force_prime_implicants(f)


@pytest.mark.parametrize("seed", range(30))
def test_group_placement_and_checkmarks(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 7)
    f = BooleanFunction(n, {m for m in range(1 << n) if rng.random() < 0.6})
    if not f.minterms:
        return
    tables = mqm_tables(f)
    primes = set()
    for i, table in enumerate(tables):
        for g, cubes in table.groups.items():
            assert all(popcount(c.least) == g for c in cubes)
            assert len(set(cubes)) == len(cubes)
        nxt = tables[i + 1] if i + 1 < len(tables) else None
        for c in table.cubes():
            # checked iff it is a constituent of some cube in the next table
            parent = nxt is not None and any(
                set(cube_members(c, n)) < set(cube_members(d, n)) for d in nxt.cubes()
            )
            assert (c in table.checkmarks) == parent
        primes.update(table.unchecked())
    assert primes == mqm_prime_implicants(f)


def test_matching_principal_soundness_sampled():
    rng = random.Random(2024)
    hits = 0
    for _ in range(20000):
        n = rng.randint(2, 8)
        esum = rng.getrandbits(n)
        a = Cube(rng.getrandbits(n) & ~esum, esum)
        b = Cube(a.least + (1 << rng.randrange(n)), esum)
        if b.least >= 1 << n or b.least & esum or popcount(b.least) != popcount(a.least) + 1:
            continue
        mpw = mqm_match(a, b)
        assert mpw is not None
        assert mpw & a.esum == 0
        merged = set(cube_members(combine(a, b, mpw), n))
        assert merged == set(cube_members(a, n)) | set(cube_members(b, n))
        hits += 1
    assert hits > 4000


def test_match_fails_across_carry():
    # 3 + 1 = 4: the difference is a power of two but the words differ in three bits
    for a, b in itertools.product(range(16), repeat=2):
        mpw = mqm_match(Cube(a), Cube(b))
        if mpw is not None and popcount(b) == popcount(a) + 1:
            assert popcount(a ^ b) == 1
