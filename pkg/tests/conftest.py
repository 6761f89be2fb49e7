import pytest

from minlogic.core import BooleanFunction, Cube

EXAMPLE1_SPEC = "n=4 m(4,5,6,8,9,10,13) d(0,7,15)"
# prime implicants as (least, esum): (0,4) (0,8) (8,9) (8,10) (9,13) (4,5,6,7) (5,7,13,15)
EXAMPLE1_PIS = {Cube(0, 4), Cube(0, 8), Cube(8, 1), Cube(8, 2), Cube(9, 4), Cube(4, 3), Cube(5, 10)}
EXAMPLE1_COVER = {Cube(8, 2), Cube(9, 4), Cube(4, 3)}


@pytest.fixture
def example1():
    return BooleanFunction(4, {4, 5, 6, 8, 9, 10, 13}, {0, 7, 15})


_acceptance_results = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.get_closest_marker("acceptance") and report.when == "call":
        _acceptance_results.append((item.name, report.outcome))


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: exit criterion, reported in the summary")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance_results:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")


def exhaustive_min_cover(pis, f):
    """Cheapest (cube count, literal count) over all PI subsets covering the care set."""
    import itertools

    from minlogic.core import cube_members

    rows = sorted(pis)
    members = [set(cube_members(c, f.n)) for c in rows]
    for k in range(1, len(rows) + 1):
        best = None
        for combo in itertools.combinations(range(len(rows)), k):
            if f.minterms <= set().union(*(members[i] for i in combo)):
                literals = sum(rows[i].literal_count(f.n) for i in combo)
                best = literals if best is None else min(best, literals)
        if best is not None:
            return k, best
    return 0, 0
