"""Cross-checks used by ``minlogic compare`` and the test-suite."""
from __future__ import annotations

from .core import BooleanFunction, cube_members, default_alphabet, sop_to_text
from .cover import Method, run_minimization
from .metrics import brute_force_prime_implicants
from .mqm import mqm_prime_implicants
from .parser import parse_sop_expression
from .qm import qm_prime_implicants


def check_function(f: BooleanFunction, alphabet: str | None = None) -> list[str]:
    """Problems found for ``f``; an empty list means every check passed."""
    problems = []
    oracle = brute_force_prime_implicants(f)
    if not f.on_set:
        return [] if not oracle else ["oracle found implicants of an empty function"]

    if not f.minterms:
        # nothing to cover, but the generators must still agree on the don't-cares
        generated = {"QM": qm_prime_implicants(f), "MQM": mqm_prime_implicants(f)}
    else:
        results = {m: run_minimization(f, m) for m in Method}
        generated = {m.name: set(r.prime_implicants) for m, r in results.items()}
    for name, pis in generated.items():
        if pis != oracle:
            problems.append(f"{name} prime implicants differ from oracle: {sorted(pis ^ oracle)}")
    if not f.minterms:
        return problems

    alphabet = alphabet or default_alphabet(f.n)
    texts = {m: sop_to_text(r.terms, alphabet) for m, r in results.items()}
    if texts[Method.QM] != texts[Method.MQM]:
        problems.append(f"methods disagree: {texts[Method.QM]!r} vs {texts[Method.MQM]!r}")

    result = results[Method.MQM]
    covered = [set(cube_members(c, f.n)) & f.minterms for c in result.cover]
    if set().union(*covered) != f.minterms:
        problems.append("cover misses care minterms")
    for i in range(len(covered)):
        rest = set().union(*(covered[:i] + covered[i + 1:]))
        if rest == f.minterms:
            problems.append(f"cube {result.cover[i]} is redundant")

    expr = parse_sop_expression(texts[Method.MQM], alphabet)
    for m in range(1 << f.n):
        value = expr.evaluate(m)
        if m in f.minterms and not value:
            problems.append(f"expression is false on care minterm {m}")
        elif m not in f.on_set and value:
            problems.append(f"expression is true on off-set minterm {m}")
    return problems
