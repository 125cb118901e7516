"""Exact criteria for algebraic hyperbolicity of zero loci in products of projective spaces."""

from .chowring import ChowClass, join_shift, zero_cycle_degree
from .criteria import (
    EpsilonCertificate,
    Kind,
    KnownStatus,
    Verdict,
    check_adjoint_instance,
    check_boundary,
    check_lines,
    check_strict,
    check_uniform,
    classify,
    classify_pn_ci,
    epsilon_certificate,
    known_hypersurface_status,
    lambda_search,
)
from .curves import (
    CurveProfile,
    CurveType,
    GenusBound,
    ScrollSpec,
    enumerate_types,
    genus_bound_basic,
    genus_bound_boundary,
    intersection_degree_check,
    min_genus_bound,
    q_degree_bound,
    scroll_class,
)
from .model import (
    AmbientSpace,
    ChernData,
    SplitBundleSpec,
    VarietyInstance,
    build_instance,
    c1_split,
    ck_split,
    section_domination_auto,
)

__version__ = "0.1.0"
