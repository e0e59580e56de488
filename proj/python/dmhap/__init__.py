"""Exact degenerate multidimensional Hermite-based Appell polynomials.

Thin python layer over the C++ core; polynomials travel as canonical text
("L^2*l1^2 + 2*L*l2"), rationals as "p/q" strings.
"""

from dmhap._core import (  # noqa: F401
    UnsupportedOperatorError,
    __version__,
    appell_numbers,
    check_identity,
    classical_limit,
    classical_reference,
    degenerate_bernoulli,
    deriv_op_apply,
    euler_integer_numbers,
    eval_entry,
    generate,
    hermite_kernel_entry,
    mult_op_apply,
    operational_rule,
    power_sum,
    run_all,
    run_suite,
    suite_names,
    to_latex,
)
