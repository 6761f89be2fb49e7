"""Two-level Boolean function minimization: Quine-McCluskey and its E-sum variant."""
from .core import (
    BooleanFunction,
    Cube,
    GroupTable,
    Literal,
    MinlogicError,
    Term,
    cube_members,
    cube_to_term,
    sop_to_text,
    term_to_text,
)
from .cover import Method, build_chart, minimize, run_minimization, select_cover
from .metrics import (
    bench_worst_case,
    brute_force_prime_implicants,
    worst_case_mqm_comparisons,
    worst_case_qm_comparisons,
)
from .mqm import combine, dedup, group_minterms, mqm_match, mqm_pass, mqm_prime_implicants
from .parser import canonicalize, parse_function_spec, parse_sop_expression
from .qm import ComparisonCounter, qm_prime_implicants

__all__ = [
    "BooleanFunction",
    "ComparisonCounter",
    "Cube",
    "GroupTable",
    "Literal",
    "Method",
    "MinlogicError",
    "Term",
    "bench_worst_case",
    "brute_force_prime_implicants",
    "build_chart",
    "canonicalize",
    "combine",
    "cube_members",
    "cube_to_term",
    "dedup",
    "group_minterms",
    "minimize",
    "mqm_match",
    "mqm_pass",
    "mqm_prime_implicants",
    "parse_function_spec",
    "parse_sop_expression",
    "qm_prime_implicants",
    "run_minimization",
    "select_cover",
    "sop_to_text",
    "term_to_text",
    "worst_case_mqm_comparisons",
    "worst_case_qm_comparisons",
]
