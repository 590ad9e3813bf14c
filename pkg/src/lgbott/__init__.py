"""Exact Borel-Weil-Bott cohomology of wedge-power bundles on Lagrangian Grassmannians."""

from .bott_engine import SINGULAR, NonSingular, Singular, bott, degree_by_pairing, module_dimension
from .bundle_model import BundleExpression, bundle_cohomology, parse_bundle_expression, weight_of
from .criterion_scanner import (
    ConditionTuple,
    Violation,
    critical_twist_window,
    enumerate_conditions,
    scan_tuple,
    verify_chain_criterion,
    verify_criterion,
)
from .lie_core import from_epsilon, pair, positive_roots, rho, to_epsilon
from .pieri_schur import conjugate, decompose_wedges, normalize_columns, pieri_wedge, sl_dim

__version__ = "0.1.0"
