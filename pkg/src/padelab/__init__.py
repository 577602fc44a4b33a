"""Exact-arithmetic laboratory for Pade tables, algebraic continued
fractions, and row convergence toward poles of meromorphic functions."""

from .core import (
    Polynomial,
    PowerSeries,
    Rational,
    RationalFunction,
    builtin_series,
    eval_rf_complex,
    find_poly_roots,
    format_rational,
    get_precision,
    parse_rational,
    parse_series_document,
    poly_product,
    precision,
    rational_normalize,
    series_from_moments,
    series_of_rational_function,
    set_precision,
)
from .contfrac import (
    AlgebraicCF,
    ContinuedFraction,
    ConvergentPair,
    NumericCF,
    builtin_algebraic_cf,
    cf_from_convergents,
    cf_to_document,
    convergent,
    euclid_cf,
    evaluate_cf,
    parse_cf_document,
    sqrt_cf,
)
from .montessus import (
    ConvergenceReport,
    ExperimentConfig,
    GridSpec,
    MeromorphicSpec,
    PoleInfo,
    PoleOrderingCheck,
    parse_experiment_document,
    pole_match,
    pole_ordering_check,
    report_to_csv_rows,
    report_to_document,
    run_row_experiment,
    taylor_of_meromorphic,
    telescoped_row_series,
)
from .pade import (
    Block,
    HankelSpec,
    PadeEntry,
    PadeTable,
    exact_det,
    exact_solve,
    hadamard_polynomial,
    hankel_det,
    hankel_grid,
    order_of_contact,
    pade_approximant,
    pade_table,
    row_sequence,
    row_to_cf,
)

__version__ = "0.1.0"
