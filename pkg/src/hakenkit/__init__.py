"""Exact combinatorics of boundary patterns, reflection doubles and cut-open hierarchies."""

from .complex import (
    Complex,
    SearchBudgetExceeded,
    are_isomorphic,
    barycentric_subdivision,
    cone,
    dual_cone,
    euler_characteristic,
    f_vector,
    find_isomorphism,
    join,
    link,
    star,
)
from .construction import (
    DoubledComplex,
    MirrorLimitExceeded,
    double,
    lift_pattern,
    partial_quotient_chi,
    verify_quotient_formula,
)
from .dyadic import Dyadic
from .flag import FlagReport, certify_haken_cell_dual, charney_davis, flag_report, is_flag, is_flag_via_links
from .homology import HomologyProfile, homology, is_generalized_homology_sphere, is_homology_manifold
from .io import (
    FormatError,
    format_complex,
    format_ledger,
    format_pattern,
    parse_complex,
    parse_ledger,
    parse_pattern,
    read_complex,
    read_ledger,
    read_pattern,
    write_complex,
    write_ledger,
    write_pattern,
)
from .pattern import (
    Nerve,
    PatternedComplex,
    PatternError,
    cell_from_flag_sphere,
    closed_pattern,
    make_pattern,
    nerve,
    orbifold_euler,
    orbifold_euler_all,
    orbifold_euler_nerve,
    orbifold_euler_poincare,
    orbifold_euler_strata,
    strata,
    usefulness_report,
)
from .surgery import (
    CutError,
    HierarchyLedger,
    certify_hierarchy,
    cut_locus,
    cut_open,
    cut_open_with_record,
    run_prehierarchy,
    verify_cut_invariance,
)

__version__ = "0.1.0"
