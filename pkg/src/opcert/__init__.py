"""Certified numerics for the overpartition counting function.

Exact values via a sparse recurrence, truncated exponential-sum series with a
rigorous remainder bound, and machine verification of a family of difference,
ratio, and cubic-discriminant inequalities for the scaled root sequence
(pbar(n)/n^alpha)^(1/n).  All real computation runs in directed-rounded
interval arithmetic; every verdict is certified or reported Undetermined.
"""

from .intervals import (
    CertInterval,
    DomainError,
    PrecisionCapError,
    Tri,
    tri_compare,
    with_refinement,
)
from .overpartitions import (
    OverpartitionTable,
    ResourceError,
    bruteforce_count,
    build_table,
    log_r_alpha,
    r_alpha_value,
)
from .zuckerman import (
    SeriesEnclosure,
    WidthError,
    certified_enclosure,
    engel_error_bound,
    exact_from_series,
    main_term_split,
    truncated_series,
)
from .differences import (
    DiffValue,
    HypothesisError,
    SandwichReport,
    UL_lemma24,
    asymptote_scan,
    corollary_checks,
    forward_difference,
    signed_diff_log,
    verify_theorem14,
)
from .turan import (
    TuranReport,
    jensen_cubic_classify,
    m_polynomials,
    reverse_turan_check,
    s_bounds_check,
    starred_bounds,
    theorem35_check,
    u_alpha,
)
from .cutoffs import CutoffValue, cutoff_compare, cutoff_set, turan_cutoff_set

__version__ = "1.0.0"
